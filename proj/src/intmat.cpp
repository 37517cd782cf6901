#include "perind/intmat.hpp"

#include <algorithm>
#include <cstdlib>

namespace perind {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::transposed() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw MalformedInput("mat_mul: dimension mismatch");
    Mat c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            long long v = a.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                c.at(i, j) = checked_add(c.at(i, j), checked_mul(v, b.at(k, j)));
        }
    return c;
}

std::vector<long long> mat_vec(const Mat& m, const std::vector<long long>& v) {
    if (static_cast<int>(v.size()) != m.cols) throw MalformedInput("mat_vec: dimension mismatch");
    std::vector<long long> r(m.rows, 0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            r[i] = checked_add(r[i], checked_mul(m.at(i, j), v[j]));
    return r;
}

namespace {

struct SnfWork {
    Mat d, p, pinv, q, qinv;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < p.cols; ++c) std::swap(p.at(i, c), p.at(j, c));
        for (int r = 0; r < pinv.rows; ++r) std::swap(pinv.at(r, i), pinv.at(r, j));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
        for (int r = 0; r < q.rows; ++r) std::swap(q.at(r, i), q.at(r, j));
        for (int c = 0; c < qinv.cols; ++c) std::swap(qinv.at(i, c), qinv.at(j, c));
    }
    // row_j += f * row_i
    void add_row(int i, int j, long long f) {
        if (f == 0) return;
        for (int c = 0; c < d.cols; ++c)
            d.at(j, c) = checked_add(d.at(j, c), checked_mul(f, d.at(i, c)));
        for (int c = 0; c < p.cols; ++c)
            p.at(j, c) = checked_add(p.at(j, c), checked_mul(f, p.at(i, c)));
        for (int r = 0; r < pinv.rows; ++r)
            pinv.at(r, i) = checked_sub(pinv.at(r, i), checked_mul(f, pinv.at(r, j)));
    }
    // col_j += f * col_i
    void add_col(int i, int j, long long f) {
        if (f == 0) return;
        for (int r = 0; r < d.rows; ++r)
            d.at(r, j) = checked_add(d.at(r, j), checked_mul(f, d.at(r, i)));
        for (int r = 0; r < q.rows; ++r)
            q.at(r, j) = checked_add(q.at(r, j), checked_mul(f, q.at(r, i)));
        for (int c = 0; c < qinv.cols; ++c)
            qinv.at(i, c) = checked_sub(qinv.at(i, c), checked_mul(f, qinv.at(j, c)));
    }
    void negate_row(int i) {
        for (int c = 0; c < d.cols; ++c) d.at(i, c) = -d.at(i, c);
        for (int c = 0; c < p.cols; ++c) p.at(i, c) = -p.at(i, c);
        for (int r = 0; r < pinv.rows; ++r) pinv.at(r, i) = -pinv.at(r, i);
    }
};

}  // namespace

SmithResult smith_normal_form(const Mat& a) {
    const int m = a.rows, n = a.cols;
    SnfWork w{a, Mat::identity(m), Mat::identity(m), Mat::identity(n), Mat::identity(n)};
    Mat& d = w.d;

    int t = 0;
    const int lim = std::min(m, n);
    while (t < lim) {
        // smallest nonzero entry in the remaining block becomes the pivot
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                long long v = std::llabs(d.at(i, j));
                if (v != 0 && (pi < 0 || v < std::llabs(d.at(pi, pj)))) { pi = i; pj = j; }
            }
        if (pi < 0) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0) continue;
                long long f = d.at(i, t) / d.at(t, t);
                w.add_row(t, i, -f);
                if (d.at(i, t) != 0) {
                    w.swap_rows(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0) continue;
                long long f = d.at(t, j) / d.at(t, t);
                w.add_col(t, j, -f);
                if (d.at(t, j) != 0) {
                    w.swap_cols(t, j);
                    clean = false;
                }
            }
        }

        // pivot must divide everything that remains
        bool redo = false;
        for (int i = t + 1; i < m && !redo; ++i)
            for (int j = t + 1; j < n && !redo; ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    w.add_row(i, t, 1);
                    redo = true;
                }
        if (redo) continue;

        if (d.at(t, t) < 0) w.negate_row(t);
        ++t;
    }

    SmithResult r{std::move(w.d), std::move(w.p), std::move(w.pinv),
                  std::move(w.q), std::move(w.qinv), t};
    return r;
}

Mat integer_kernel(const Mat& a) {
    SmithResult s = smith_normal_form(a);
    const int n = a.cols;
    Mat k(n, n - s.rank);
    for (int j = s.rank; j < n; ++j)
        for (int i = 0; i < n; ++i) k.at(i, j - s.rank) = s.q.at(i, j);
    return k;
}

BareissResult bareiss_eliminate(Mat a) {
    const int m = a.rows, n = a.cols;
    long long prev = 1;
    int r = 0;
    bool sign_flips = false;
    for (int c = 0; c < n && r < m; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (a.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(r, j));
            sign_flips = !sign_flips;
        }
        for (int i = r + 1; i < m; ++i) {
            for (int j = c + 1; j < n; ++j) {
                long long num = checked_sub(checked_mul(a.at(r, c), a.at(i, j)),
                                            checked_mul(a.at(i, c), a.at(r, j)));
                a.at(i, j) = num / prev;  // exact by Bareiss
            }
            a.at(i, c) = 0;
        }
        prev = a.at(r, c);
        ++r;
    }
    BareissResult res;
    res.rank = r;
    if (m == n && r == n) {
        res.det = a.at(n - 1, n - 1);
        if (sign_flips) res.det = -res.det;
    }
    return res;
}

}  // namespace perind
