#include "perind/periodindex.hpp"

#include <algorithm>
#include <numeric>

namespace perind {

namespace {

long long epsilon(long long n) { return std::gcd(n, 2LL); }

int h3_two_dim(const Model& m) {
    int n = 0;
    for (long long f : m.h3().factors)
        if (f % 2 == 0) ++n;
    return n;
}

// coordinates of a 2-torsion element of H3 in the GF(2) space H3[2]
gf2::Word h3_two_bits(const Model& m, const Elem& e) {
    gf2::Word w = 0;
    int bit = 0;
    for (int i = 0; i < m.h3().torsion_rank(); ++i) {
        if (m.h3().factors[i] % 2 != 0) continue;
        if (e[i] != 0) w |= gf2::Word{1} << bit;
        ++bit;
    }
    return w;
}

gf2::BitMat bock_bit_matrix(const Model& m) {
    gf2::BitMat b(h3_two_dim(m), m.dim_w());
    for (int j = 0; j < m.dim_w(); ++j) {
        gf2::Word col = h3_two_bits(m, m.bock_of(gf2::Word{1} << j));
        for (int i = 0; i < b.rows; ++i) b.set(i, j, gf2::get_bit(col, i));
    }
    return b;
}

Elem combine_section(const Model& m, gf2::Word coeffs, const std::vector<Elem>& section) {
    Elem e = m.h2().zero();
    for (size_t b = 0; b < section.size(); ++b)
        if (gf2::get_bit(coeffs, static_cast<int>(b))) e = m.h2().add(e, section[b]);
    return e;
}

void check_report(const BrauerClassReport& r) {
    auto divides = [](long long a, long long b) { return a != 0 && b % a == 0; };
    bool ok = true;
    switch (r.index.kind) {
        case IndexValue::Kind::EXACT:
            ok = divides(r.period, r.index.value) && divides(r.index.value, r.epsilon_bound);
            if (r.tpic == Tri::YES) ok = ok && divides(r.index.value, r.period * r.period);
            break;
        case IndexValue::Kind::INTERVAL_2_4:
            ok = r.period == 2 && divides(4, r.epsilon_bound);
            break;
        case IndexValue::Kind::DIVIDES:
            ok = divides(r.index.value, r.epsilon_bound);
            break;
    }
    if (!ok) invariant_violation("report violates per | ind | eps(n) n^2");
}

// Shared lift-and-reduce: xi in C_2m with beta(xi) = alpha, then
// x = rho_2(xi) carried into W along the fixed splitting section.
struct Reduction {
    ModNModel::CElem xi;
    gf2::Word x;
};

Reduction reduce_even_class(const Model& m, const Elem& alpha, long long order) {
    ModNModel c2m = build_modn(m.h2(), m.h3(), order);
    ModNModel c2 = build_modn(m.h2(), m.h3(), 2);

    ModNModel::CElem xi = c2m.zero();
    const int tr = c2m.tensor_rank();
    for (int j = 0; j < static_cast<int>(c2m.btors_orders.size()); ++j) {
        long long step = m.h3().factors[j] / c2m.btors_orders[j];
        if (alpha[j] % step != 0)
            invariant_violation("even-period lift: alpha not killed by its own order");
        xi[tr + j] = alpha[j] / step;
    }
    if (!m.h3().equal(c2m.beta(xi), alpha))
        invariant_violation("even-period lift: beta(xi) != alpha");

    ModNModel::CElem x2 = coeff_reduce(c2m, c2).apply(xi);

    gf2::Word xw = 0;
    for (int j = 0; j < m.h2().rank(); ++j)
        if (c2.tensor_orders[j] == 2 && x2[j] == 1) xw ^= m.raw().red2.col(j);

    Elem target = c2.beta(x2);  // 2-torsion element of H3
    auto w = gf2::solve_min(bock_bit_matrix(m), h3_two_bits(m, target));
    if (!w) invariant_violation("even-period lift: im(bock) does not cover H3[2]");
    xw ^= *w;

    long long k = order / 2;
    if (!m.h3().equal(m.bock_of(xw), m.h3().scale(k, alpha)))
        invariant_violation("even-period lift: bock(x) != m alpha");
    return {std::move(xi), xw};
}

}  // namespace

bool IndexValue::could_be(long long n) const {
    switch (kind) {
        case Kind::EXACT: return n == value;
        case Kind::INTERVAL_2_4: return n == 2 || n == 4;
        case Kind::DIVIDES: return n >= 1 && value % n == 0;
    }
    return false;
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::ODD: return "ODD";
        case Regime::MEMBER_NONZERO: return "MEMBER_NONZERO";
        case Regime::MEMBER_ZERO: return "MEMBER_ZERO";
        case Regime::NON_MEMBER: return "NON_MEMBER";
    }
    return "?";
}

const char* tri_name(Tri t) {
    switch (t) {
        case Tri::YES: return "holds";
        case Tri::NO: return "fails";
        case Tri::UNKNOWN: return "unknown";
    }
    return "?";
}

long long period(const Model& m, const Elem& alpha) {
    OrderResult o = element_order(m.h3(), alpha);
    if (!o.finite) throw UnsupportedInput("period: class is not torsion, not a Brauer class");
    return o.order;
}

Elem solve_ex(const Model& m, gf2::Word x) {
    if (!m.spin_c()) throw PreconditionError("solve_ex: model is not spin^c");

    // lambda_x on V, sliced from the triple-product tensor
    forms2::Z2SymForm lam = forms2::form_from_trilinear(m.raw().T, x, m.v_basis());
    gf2::Word d = forms2::solve_diagonal(lam);
    Elem d_x = combine_section(m, d, m.v_section());
    Elem e_x = m.h2().add(*m.c1(), d_x);

    if (!(beta_square_functional(m, x) == beta_times_functional(m, x, e_x)))
        invariant_violation("solve_ex: certificate identity failed on a valid spin^c model");
    return e_x;
}

MembershipResult membership(const Model& m, gf2::Word x) {
    const auto& imb = m.im_red2_basis();
    const auto& vb = m.v_basis();
    gf2::BitMat sys(static_cast<int>(vb.size()), static_cast<int>(imb.size()));
    gf2::Word rhs = 0;
    for (size_t a = 0; a < vb.size(); ++a) {
        for (size_t b = 0; b < imb.size(); ++b)
            sys.set(static_cast<int>(a), static_cast<int>(b), m.triple(x, imb[b], vb[a]));
        if (m.triple(x, x, vb[a])) rhs |= gf2::Word{1} << a;
    }
    MembershipResult res;
    if (auto c = gf2::solve_min(sys, rhs)) {
        res.member = true;
        res.witness = combine_section(m, *c, m.im_red2_section());
    } else {
        res.member = false;
        res.obstruction = beta_square_functional(m, x);
    }
    return res;
}

BrauerClassReport classify_index_period2(const Model& m, gf2::Word x,
                                         std::optional<bool> p2_hint) {
    Elem alpha = m.bock_of(x);
    if (finite_order(m.h3(), alpha) != 2)
        throw PreconditionError("classify_index_period2: per(bock(x)) != 2");

    BrauerClassReport r;
    r.alpha = alpha;
    r.period = 2;
    r.epsilon_bound = epsilon(2) * 4;

    MembershipResult mem = membership(m, x);
    if (!mem.member) {
        // ord(Q~) = 4
        r.regime = Regime::NON_MEMBER;
        r.index = {IndexValue::Kind::EXACT, 8};
        r.tpic = Tri::NO;
    } else if (!beta_square_functional(m, x).is_zero()) {
        // ord(Q~) = 2
        r.regime = Regime::MEMBER_NONZERO;
        r.index = {IndexValue::Kind::EXACT, 4};
        r.tpic = Tri::YES;
        r.certificate_ex = mem.witness;
    } else {
        // ord(Q~) in {1, 2}: only Pontrjagin-square data can split this
        r.regime = Regime::MEMBER_ZERO;
        if (p2_hint)
            r.index = {IndexValue::Kind::EXACT, *p2_hint ? 2LL : 4LL};
        else
            r.index = {IndexValue::Kind::INTERVAL_2_4, 4};
        r.tpic = Tri::YES;
        r.certificate_ex = mem.witness;
    }
    if (m.spin_c()) r.certificate_ex = solve_ex(m, x);
    check_report(r);
    return r;
}

EvenPeriodCertificate even_period_certificate(const Model& m, const Elem& alpha) {
    if (!m.spin_c()) throw PreconditionError("even_period_certificate: model is not spin^c");
    long long n = finite_order(m.h3(), alpha);
    if (n == 1) {
        EvenPeriodCertificate c;
        c.alpha = alpha;
        c.order = 1;
        c.m = 0;
        c.e_x = m.h2().zero();
        c.index_bound = 1;
        return c;
    }
    if (n % 2 != 0)
        throw PreconditionError("even_period_certificate: odd order, use the ODD regime");

    Reduction red = reduce_even_class(m, alpha, n);
    EvenPeriodCertificate c;
    c.alpha = alpha;
    c.order = n;
    c.m = n / 2;
    c.xi = std::move(red.xi);
    c.x = red.x;
    c.e_x = solve_ex(m, red.x);
    c.index_bound = checked_mul(n, n);
    return c;
}

std::vector<gf2::Word> bock_preimages(const Model& m, const Elem& alpha) {
    auto s = gf2::solve(bock_bit_matrix(m), h3_two_bits(m, alpha));
    std::vector<gf2::Word> out;
    if (!s) return out;
    const size_t nn = s->nullspace.size();
    for (gf2::Word mask = 0; mask < (gf2::Word{1} << nn); ++mask) {
        gf2::Word x = s->particular;
        for (size_t i = 0; i < nn; ++i)
            if (gf2::get_bit(mask, static_cast<int>(i))) x ^= s->nullspace[i];
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<BrauerClassReport> tpic_report(const Model& m) {
    std::vector<BrauerClassReport> reports;
    const bool check_all_preimages = m.dim_w() <= 12;

    for (const Elem& alpha : m.h3().torsion_elements()) {
        long long n = finite_order(m.h3(), alpha);
        BrauerClassReport r;
        r.alpha = alpha;
        r.period = n;
        r.epsilon_bound = checked_mul(epsilon(n), checked_mul(n, n));

        if (n == 1) {
            r.index = {IndexValue::Kind::EXACT, 1};
            r.regime = Regime::MEMBER_ZERO;
            r.tpic = Tri::YES;
        } else if (n % 2 == 1) {
            // n Q~(xi) = 0 for odd n; ind | n^2 with no model data consumed
            r.index = {IndexValue::Kind::DIVIDES, n * n};
            r.regime = Regime::ODD;
            r.tpic = Tri::YES;
        } else if (n == 2) {
            std::vector<gf2::Word> xs = bock_preimages(m, alpha);
            if (xs.empty()) invariant_violation("tpic_report: order-2 class with no bock preimage");
            r = classify_index_period2(m, xs.front());
            if (check_all_preimages)
                for (gf2::Word x : xs) {
                    BrauerClassReport other = classify_index_period2(m, x);
                    if (other.regime != r.regime || !(other.index.kind == r.index.kind &&
                                                      other.index.value == r.index.value))
                        invariant_violation("tpic_report: classifier depends on the preimage x");
                }
        } else {
            if (m.spin_c()) {
                EvenPeriodCertificate cert = even_period_certificate(m, alpha);
                r.index = {IndexValue::Kind::DIVIDES, cert.index_bound};
                r.tpic = Tri::YES;
                MembershipResult mem = membership(m, cert.x);
                r.regime = mem.member
                               ? (beta_square_functional(m, cert.x).is_zero()
                                      ? Regime::MEMBER_ZERO
                                      : Regime::MEMBER_NONZERO)
                               : Regime::NON_MEMBER;
                r.certificate_ex = cert.e_x;
            } else {
                Reduction red = reduce_even_class(m, alpha, n);
                MembershipResult mem = membership(m, red.x);
                if (mem.member) {
                    // beta(x^2) = beta(x) e = m alpha e, so [beta(x^2)] = 0
                    r.index = {IndexValue::Kind::DIVIDES, n * n};
                    r.tpic = Tri::YES;
                    r.regime = beta_square_functional(m, red.x).is_zero()
                                   ? Regime::MEMBER_ZERO
                                   : Regime::MEMBER_NONZERO;
                    r.certificate_ex = mem.witness;
                } else {
                    r.index = {IndexValue::Kind::DIVIDES, r.epsilon_bound};
                    r.tpic = Tri::UNKNOWN;
                    r.regime = Regime::NON_MEMBER;
                }
            }
        }
        check_report(r);
        reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace perind
