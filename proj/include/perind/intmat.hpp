#pragma once

#include <vector>

#include "perind/errors.hpp"

namespace perind {

long long checked_add(long long a, long long b);
long long checked_sub(long long a, long long b);
long long checked_mul(long long a, long long b);

// Dense integer matrix, row-major, exact arithmetic.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int n);
    Mat transposed() const;
    friend bool operator==(const Mat&, const Mat&) = default;
};

Mat mat_mul(const Mat& a, const Mat& b);
std::vector<long long> mat_vec(const Mat& m, const std::vector<long long>& v);

// p * a * q = d with p, q unimodular, d diagonal, d_1 | d_2 | ... | d_rank > 0.
struct SmithResult {
    Mat d, p, pinv, q, qinv;
    int rank = 0;
};

SmithResult smith_normal_form(const Mat& a);

// Basis of {x : a x = 0}, returned as matrix columns.
Mat integer_kernel(const Mat& a);

// Fraction-free (Bareiss) rank; determinant is meaningful for square full-rank input.
struct BareissResult {
    int rank = 0;
    long long det = 0;  // zero when not square or rank-deficient
};
BareissResult bareiss_eliminate(Mat a);

}  // namespace perind
