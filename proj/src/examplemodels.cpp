#include "perind/examplemodels.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace perind {

SixManifoldModel model_a_teichner_orientable() {
    SixManifoldModel m;
    m.H2 = FgAbelianGroup{{4}, 0};
    m.H3 = FgAbelianGroup{{2}, 0};
    m.dim_w = 2;  // basis {t, x}
    m.red2 = gf2::BitMat(2, 1);
    m.red2.set(0, 0, true);  // s |-> t
    m.bock = Mat(1, 2);
    m.bock.at(0, 1) = 1;  // x |-> a
    m.T = forms2::Z2Trilinear::from_triples(2, {{1, 1, 0}, {1, 0, 0}});
    m.v2 = 0;
    m.c1 = Elem{0};
    return m;
}

SixManifoldModel model_b_teichner_nonorientable() {
    SixManifoldModel m;
    m.H2 = FgAbelianGroup{{4}, 0};
    m.H3 = FgAbelianGroup{{2, 2}, 0};
    m.dim_w = 3;  // basis {t, x, v}
    m.red2 = gf2::BitMat(3, 1);
    m.red2.set(0, 0, true);  // s |-> t
    m.bock = Mat(2, 3);
    m.bock.at(0, 1) = 1;  // x |-> a
    m.bock.at(1, 2) = 1;  // v |-> a'
    m.T = forms2::Z2Trilinear::from_triples(3, {{1, 1, 0}, {2, 1, 0}});
    m.v2 = gf2::Word{1} << 2;
    return m;
}

void Z2RingSlice::check() const {
    if (dim1 < 0 || dim1 > gf2::kMaxDim || dim2 < 0 || dim2 > gf2::kMaxDim)
        throw MalformedInput("ring slice: dimension out of range");
    if (static_cast<int>(prod.size()) != dim1) throw MalformedInput("ring slice: product shape");
    for (const auto& row : prod) {
        if (static_cast<int>(row.size()) != dim1) throw MalformedInput("ring slice: product shape");
        for (gf2::Word w : row)
            if (w >> dim2) throw MalformedInput("ring slice: product value outside degree 2");
    }
    for (int i = 0; i < dim1; ++i)
        for (int j = 0; j < i; ++j)
            if (prod[i][j] != prod[j][i]) throw MalformedInput("ring slice: product not symmetric");
    if (bock2.cols != dim2) throw MalformedInput("ring slice: Bockstein predicate shape");
}

gf2::Word Z2RingSlice::product(gf2::Word a, gf2::Word b) const {
    if (a >> dim1 || b >> dim1) throw MalformedInput("ring slice: class outside degree 1");
    gf2::Word r = 0;
    for (int i = 0; i < dim1; ++i)
        if (gf2::get_bit(a, i))
            for (int j = 0; j < dim1; ++j)
                if (gf2::get_bit(b, j)) r ^= prod[i][j];
    return r;
}

SphereBundleSW sphere_bundle_low_sw(const Z2RingSlice& ring, gf2::Word w1m, gf2::Word w2m,
                                    gf2::Word w1e, gf2::Word w2e) {
    ring.check();
    if (w1m >> ring.dim1 || w1e >> ring.dim1) throw MalformedInput("sphere bundle: degree-1 class");
    if (w2m >> ring.dim2 || w2e >> ring.dim2) throw MalformedInput("sphere bundle: degree-2 class");
    SphereBundleSW out;
    out.w1n = w1m ^ w1e;
    out.w2n = w2m ^ ring.product(w1m, w1e) ^ w2e;
    // orientable total space with both w2 contributions integrally liftable
    if (w1m == w1e && ring.bockstein_vanishes(w2m) && ring.bockstein_vanishes(w2e))
        out.verdict = SpinCVerdict::SPIN_C;
    return out;
}

namespace {

// candidate invariant-factor lists: (), (d), (d1, d2) with d1 | d2
std::vector<std::vector<long long>> factor_lists(const std::vector<long long>& allowed) {
    std::set<long long> ds;
    for (long long f : allowed) {
        if (f < 2) throw MalformedInput("enumerate: invariant factors must be >= 2");
        for (long long d = 2; d <= f; ++d)
            if (f % d == 0) ds.insert(d);
    }
    std::vector<std::vector<long long>> out{{}};
    for (long long d : ds) out.push_back({d});
    for (long long d1 : ds)
        for (long long d2 : ds)
            if (d2 % d1 == 0) out.push_back({d1, d2});
    return out;
}

int even_count(const std::vector<long long>& factors) {
    int k = 0;
    for (long long f : factors)
        if (f % 2 == 0) ++k;
    return k;
}

// all invertible b x b GF(2) matrices, in integer order of their packed bits
std::vector<gf2::BitMat> invertible_bitmats(int b) {
    std::vector<gf2::BitMat> out;
    const int total = b * b;
    for (uint64_t bits = 0; bits < (uint64_t{1} << total); ++bits) {
        gf2::BitMat m(b, b);
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < b; ++j)
                m.set(i, j, (bits >> (i * b + j)) & 1);
        if (gf2::rank(m) == b) out.push_back(std::move(m));
    }
    return out;
}

std::vector<std::array<int, 3>> orbit_triples(int dim) {
    std::vector<std::array<int, 3>> out;
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j)
            for (int k = j; k < dim; ++k) out.push_back({i, j, k});
    return out;
}

}  // namespace

void enumerate_valid_models(int max_dim_w, const std::vector<long long>& allowed_factors,
                            const std::function<void(const SixManifoldModel&)>& sink) {
    if (max_dim_w < 0) throw MalformedInput("enumerate: negative dimension bound");
    if (max_dim_w > 4)
        throw UnsupportedInput(
            "enumerate: max dim W = " + std::to_string(max_dim_w) + " needs up to 2^" +
            std::to_string(max_dim_w * (max_dim_w + 1) * (max_dim_w + 2) / 6) +
            " triple-product tensors per frame; the supported bound is 4");

    const auto lists = factor_lists(allowed_factors);
    for (const auto& h2f : lists) {
        const int k = even_count(h2f);  // dim H2/2H2; the t-block of W
        for (const auto& h3f : lists) {
            const int b = even_count(h3f);  // dim H3[2]; the x-block of W
            const int dim = k + b;          // forced by Bockstein exactness
            if (dim > max_dim_w) continue;

            SixManifoldModel base;
            base.H2 = FgAbelianGroup{h2f, 0};
            base.H3 = FgAbelianGroup{h3f, 0};
            base.dim_w = dim;

            // canonical reduction: the i-th even-order generator hits e_i
            base.red2 = gf2::BitMat(dim, base.H2.rank());
            std::vector<int> even_gen;  // pivot row -> H2 generator index
            for (int j = 0; j < base.H2.rank(); ++j)
                if (base.H2.factors[j] % 2 == 0) {
                    base.red2.set(static_cast<int>(even_gen.size()), j, true);
                    even_gen.push_back(j);
                }

            std::vector<int> even_h3;  // H3[2] coordinate -> H3 generator index
            for (int j = 0; j < base.H3.rank(); ++j)
                if (base.H3.factors[j] % 2 == 0) even_h3.push_back(j);

            const auto bocks = invertible_bitmats(b);
            const auto orbits = orbit_triples(dim);
            const uint64_t t_count = uint64_t{1} << orbits.size();

            for (uint64_t t_bits = 0; t_bits < t_count; ++t_bits) {
                forms2::Z2Trilinear T(dim);
                for (size_t o = 0; o < orbits.size(); ++o)
                    if ((t_bits >> o) & 1) T.set_orbit(orbits[o][0], orbits[o][1], orbits[o][2], true);

                // torsion-vanishing: integral block must be null
                bool ok = true;
                for (int a = 0; a < k && ok; ++a)
                    for (int c = a; c < k && ok; ++c)
                        for (int e = c; e < k && ok; ++e) ok = !T.get(a, c, e);
                if (!ok) continue;

                for (gf2::Word v2 = 0; v2 < (gf2::Word{1} << dim); ++v2) {
                    // Wu-Cartan on basis tuples
                    bool wu = true;
                    for (int w = 0; w < dim && wu; ++w)
                        for (int r = 0; r < k && wu; ++r)
                            wu = T.eval(v2, gf2::Word{1} << w, gf2::Word{1} << r) ==
                                 (T.get(w, w, r) ^ T.get(w, r, r));
                    if (!wu) continue;

                    SixManifoldModel m = base;
                    m.T = T;
                    m.v2 = v2;
                    const bool spin = (v2 >> k) == 0;  // bock kills v2 iff no x-block bits
                    if (spin) {
                        Elem c1 = m.H2.zero();
                        for (int i = 0; i < k; ++i)
                            if (gf2::get_bit(v2, i)) c1[even_gen[i]] = 1;
                        m.c1 = std::move(c1);
                    }

                    for (const auto& bm : bocks) {
                        m.bock = Mat(m.H3.rank(), dim);
                        for (int col = 0; col < b; ++col)
                            for (int row = 0; row < b; ++row)
                                if (bm.get(row, col)) {
                                    int g = even_h3[row];
                                    m.bock.at(g, k + col) = m.H3.factors[g] / 2;
                                }
                        if (validate(m).pass) sink(m);
                    }
                }
            }
        }
    }
}

}  // namespace perind
