#include <doctest.h>

#include <random>

#include "perind/intmat.hpp"

using namespace perind;

namespace {

Mat random_mat(std::mt19937& rng, int r, int c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_CASE("checked arithmetic overflows loudly") {
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_mul(-4, 5) == -20);
    long long big = 0x4000000000000000LL;
    CHECK_THROWS_AS(checked_add(big, big), OverflowError);
    CHECK_THROWS_AS(checked_mul(big, 4), OverflowError);
}

TEST_CASE("smith normal form: transforms, divisibility, rank oracle") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 300; ++iter) {
        int r = 1 + static_cast<int>(rng() % 5);
        int c = 1 + static_cast<int>(rng() % 5);
        Mat a = random_mat(rng, r, c, -6, 6);
        SmithResult s = smith_normal_form(a);

        CHECK(mat_mul(mat_mul(s.p, a), s.q) == s.d);
        CHECK(mat_mul(s.p, s.pinv) == Mat::identity(r));
        CHECK(mat_mul(s.q, s.qinv) == Mat::identity(c));

        for (int i = 0; i < std::min(r, c); ++i)
            for (int j = 0; j < std::min(r, c); ++j)
                if (i != j) CHECK(s.d.at(i, j) == 0);
        for (int i = 0; i + 1 < s.rank; ++i) {
            CHECK(s.d.at(i, i) > 0);
            CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
        }
        for (int i = s.rank; i < std::min(r, c); ++i) CHECK(s.d.at(i, i) == 0);

        // independent fraction-free elimination agrees on the rank
        CHECK(s.rank == bareiss_eliminate(a).rank);
    }
}

TEST_CASE("smith normal form: determinant magnitude is preserved") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 1 + static_cast<int>(rng() % 4);
        Mat a = random_mat(rng, n, n, -5, 5);
        BareissResult b = bareiss_eliminate(a);
        SmithResult s = smith_normal_form(a);
        long long prod = 1;
        for (int i = 0; i < n; ++i) prod *= s.d.at(i, i);
        long long det = b.det < 0 ? -b.det : b.det;
        if (b.rank == n) CHECK(prod == det);
        else CHECK(prod == 0);
    }
}

TEST_CASE("integer kernel") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        int r = 1 + static_cast<int>(rng() % 4);
        int c = 1 + static_cast<int>(rng() % 5);
        Mat a = random_mat(rng, r, c, -4, 4);
        Mat k = integer_kernel(a);
        CHECK(k.cols == c - bareiss_eliminate(a).rank);
        if (k.cols > 0) {
            Mat prod = mat_mul(a, k);
            for (long long v : prod.a) CHECK(v == 0);
        }
    }
}
