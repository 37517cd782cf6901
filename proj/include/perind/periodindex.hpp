#pragma once

#include <optional>
#include <vector>

#include "perind/bockstein.hpp"
#include "perind/model6.hpp"

namespace perind {

enum class Regime { ODD, MEMBER_NONZERO, MEMBER_ZERO, NON_MEMBER };
enum class Tri { YES, NO, UNKNOWN };

// Index value: exact, the unresolved {2,4} interval, or a divisibility bound.
struct IndexValue {
    enum class Kind { EXACT, INTERVAL_2_4, DIVIDES };
    Kind kind = Kind::EXACT;
    long long value = 1;  // the exact value, or the divisor bound
    bool could_be(long long n) const;
};

struct BrauerClassReport {
    Elem alpha;
    long long period = 1;
    IndexValue index;
    Regime regime = Regime::MEMBER_ZERO;
    long long epsilon_bound = 1;  // eps(n) n^2 with eps(n) = gcd(n, 2)
    Tri tpic = Tri::YES;
    std::optional<Elem> certificate_ex;
};

const char* regime_name(Regime r);
const char* tri_name(Tri t);

long long period(const Model& m, const Elem& alpha);

// The main-theorem witness e_x = c1 + d_x; requires a spin^c model.
Elem solve_ex(const Model& m, gf2::Word x);

struct MembershipResult {
    bool member = false;
    Elem witness;                   // when member
    TorsionFunctional obstruction;  // beta(x^2) as a functional, when not
};
// Decides beta(x^2) in beta(x) H^2; spin^c not required.
MembershipResult membership(const Model& m, gf2::Word x);

// Antieau-Williams regime classifier for period-2 classes.
BrauerClassReport classify_index_period2(const Model& m, gf2::Word x,
                                         std::optional<bool> p2_hint = std::nullopt);

// The even-period derivation: lift alpha to xi mod 2m, reduce to x mod 2,
// certify beta(x^2) = beta(x) e_x, conclude ind | (2m)^2.
struct EvenPeriodCertificate {
    Elem alpha;
    long long order = 2;  // 2m
    long long m = 1;
    ModNModel::CElem xi;  // in C_2m with beta(xi) = alpha
    gf2::Word x = 0;      // rho_2(xi) mapped into W
    Elem e_x;
    long long index_bound = 4;  // (2m)^2
};
EvenPeriodCertificate even_period_certificate(const Model& m, const Elem& alpha);

// One report per torsion class of H3, deterministic enumeration order.
std::vector<BrauerClassReport> tpic_report(const Model& m);

// All preimages of an order-2 class under bock (GF(2) affine subspace of W).
std::vector<gf2::Word> bock_preimages(const Model& m, const Elem& alpha);

}  // namespace perind
