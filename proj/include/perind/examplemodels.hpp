#pragma once

#include <functional>
#include <vector>

#include "perind/model6.hpp"

namespace perind {

// The two pinned example models. Both have H2 = Z/4<s> with red2(s) = t.
//
// MODEL-A (orientable base): H3 = Z/2<a>, W = span{t, x}, bock(x) = a,
// v2 = 0 with c1 = 0, and T(x,x,t) = T(x,t,t) = 1. Spin^c; its nonzero
// Brauer class has period 2 and index 4.
SixManifoldModel model_a_teichner_orientable();

// MODEL-B (non-orientable base): H3 = Z/2<a> + Z/2<a'>, W = span{t, x, v},
// bock(x) = a, bock(v) = a', v2 = v with no c1, and T(x,x,t) = T(v,x,t) = 1.
// Not spin^c; bock(x) has period 2 and index 8.
SixManifoldModel model_b_teichner_nonorientable();

// Degrees 1 and 2 of a mod-2 cohomology ring: a product table on degree-1
// classes and a linear predicate for "the integral Bockstein kills this
// degree-2 class".
struct Z2RingSlice {
    int dim1 = 0;
    int dim2 = 0;
    std::vector<std::vector<gf2::Word>> prod;  // dim1 x dim1, symmetric
    gf2::BitMat bock2;                         // w lifts integrally iff bock2 w = 0

    void check() const;
    gf2::Word product(gf2::Word a, gf2::Word b) const;
    bool bockstein_vanishes(gf2::Word w) const { return bock2.mul_vec(w) == 0; }
};

enum class SpinCVerdict { SPIN_C, UNKNOWN };

// Whitney-sum Stiefel-Whitney classes of a sphere bundle's total space:
//   w1N = w1M + w1E,  w2N = w2M + w1M w1E + w2E.
// SPIN_C when w1M = w1E and the Bockstein kills both w2 terms.
struct SphereBundleSW {
    gf2::Word w1n = 0;
    gf2::Word w2n = 0;
    SpinCVerdict verdict = SpinCVerdict::UNKNOWN;
};
SphereBundleSW sphere_bundle_low_sw(const Z2RingSlice& ring, gf2::Word w1m, gf2::Word w2m,
                                    gf2::Word w1e, gf2::Word w2e);

// Every valid model with torsion-only H2 and H3 whose invariant factors
// divide an allowed factor (at most 2 torsion generators each), the canonical
// reduction matrix, and all (T, v2, bock) assignments passing validation.
// Deterministic order. max_dim_w <= 4.
void enumerate_valid_models(int max_dim_w, const std::vector<long long>& allowed_factors,
                            const std::function<void(const SixManifoldModel&)>& sink);

}  // namespace perind
