#include "perind/model6.hpp"

#include <sstream>

namespace perind {

namespace {

std::string word_str(gf2::Word w, int dim) {
    std::string s(dim, '0');
    for (int i = 0; i < dim; ++i)
        if (gf2::get_bit(w, i)) s[i] = '1';
    return s;
}

void check_shapes(const SixManifoldModel& m) {
    m.H2.check_normal_form();
    m.H3.check_normal_form();
    if (m.dim_w < 0 || m.dim_w > 16) throw MalformedInput("model: dim_W out of range");
    if (m.red2.rows != m.dim_w || m.red2.cols != m.H2.rank())
        throw MalformedInput("model: red2 must be dim_W x rank(H2)");
    if (m.bock.rows != m.H3.rank() || m.bock.cols != m.dim_w)
        throw MalformedInput("model: bock must be rank(H3) x dim_W");
    if (m.T.dim() != m.dim_w) throw MalformedInput("model: T must have dimension dim_W");
    if (m.v2 >> m.dim_w) throw MalformedInput("model: v2 outside W");
    if (m.c1) m.H2.check_element(*m.c1);
}

// column j of bock as an element of H3
Elem bock_column(const SixManifoldModel& m, int j) {
    Elem e(m.H3.rank());
    for (int i = 0; i < m.H3.rank(); ++i) e[i] = m.bock.at(i, j);
    return m.H3.reduce(std::move(e));
}

// coordinates of a 2-torsion element of H3 in the GF(2) space H3[2]
// (one bit per even invariant factor; free coordinates are zero)
gf2::Word h3_two_torsion_bits(const SixManifoldModel& m, const Elem& e) {
    gf2::Word w = 0;
    int bit = 0;
    for (int i = 0; i < m.H3.torsion_rank(); ++i) {
        if (m.H3.factors[i] % 2 != 0) continue;
        if (e[i] != 0) w |= gf2::Word{1} << bit;
        ++bit;
    }
    return w;
}

int h3_two_torsion_dim(const SixManifoldModel& m) {
    int n = 0;
    for (long long f : m.H3.factors)
        if (f % 2 == 0) ++n;
    return n;
}

gf2::Word red2_apply(const SixManifoldModel& m, const Elem& e) {
    gf2::Word w = 0;
    for (int j = 0; j < m.H2.rank(); ++j)
        if (e[j] & 1) w ^= m.red2.col(j);
    return w;
}

std::vector<int> im_red2_pivots(const SixManifoldModel& m, bool torsion_only) {
    std::vector<gf2::Word> cols;
    int n = torsion_only ? m.H2.torsion_rank() : m.H2.rank();
    for (int j = 0; j < n; ++j) cols.push_back(m.red2.col(j));
    return gf2::independent_subset(cols);
}

}  // namespace

std::string ValidationReport::describe() const {
    if (pass) return "pass";
    std::ostringstream os;
    for (const auto& v : violations)
        os << v.invariant << " [witness: " << v.witness << "]\n";
    return os.str();
}

ValidationReport validate(const SixManifoldModel& m) {
    check_shapes(m);
    ValidationReport rep;
    auto fail = [&](const std::string& inv, const std::string& wit) {
        rep.pass = false;
        rep.violations.push_back({inv, wit});
    };

    // hom well-definedness: generator of odd order must reduce to zero,
    // bock columns must be 2-torsion
    for (int j = 0; j < m.H2.torsion_rank(); ++j)
        if (m.H2.factors[j] % 2 != 0 && m.red2.col(j) != 0)
            fail("red2-well-defined", "generator " + std::to_string(j) + " of odd order");
    for (int j = 0; j < m.dim_w; ++j) {
        Elem col = bock_column(m, j);
        OrderResult o = element_order(m.H3, col);
        if (!o.finite || o.order > 2)
            fail("bock-into-2-torsion", "basis vector " + std::to_string(j));
    }
    if (!rep.pass) return rep;

    // invariant 1: mod-2 Bockstein exactness
    //   ker(red2) = 2 H2, i.e. red2 injective on H2/2H2
    std::vector<gf2::Word> even_cols;
    for (int j = 0; j < m.H2.rank(); ++j)
        if (j >= m.H2.torsion_rank() || m.H2.factors[j] % 2 == 0)
            even_cols.push_back(m.red2.col(j));
    if (gf2::independent_subset(even_cols).size() != even_cols.size())
        fail("exactness:ker(red2)=2H2", "red2 not injective on H2/2H2");

    //   im(bock) = H3[2]
    gf2::BitMat bock_bits(h3_two_torsion_dim(m), m.dim_w);
    for (int j = 0; j < m.dim_w; ++j) {
        gf2::Word b = h3_two_torsion_bits(m, bock_column(m, j));
        for (int i = 0; i < bock_bits.rows; ++i) bock_bits.set(i, j, gf2::get_bit(b, i));
    }
    int bock_rank = gf2::rank(bock_bits);
    if (bock_rank != h3_two_torsion_dim(m))
        fail("exactness:im(bock)=H3[2]", "rank " + std::to_string(bock_rank) + " < dim H3[2]");

    //   ker(bock) = im(red2)
    for (int j = 0; j < m.H2.rank(); ++j) {
        gf2::Word w = m.red2.col(j);
        gf2::Word img = 0;
        for (int i = 0; i < m.dim_w; ++i)
            if (gf2::get_bit(w, i)) img ^= h3_two_torsion_bits(m, bock_column(m, i));
        if (img != 0)
            fail("exactness:im(red2)<=ker(bock)", "generator " + std::to_string(j));
    }
    int im_red2_dim = static_cast<int>(im_red2_pivots(m, false).size());
    if (m.dim_w - bock_rank != im_red2_dim)
        fail("exactness:ker(bock)=im(red2)",
             "dim ker(bock) = " + std::to_string(m.dim_w - bock_rank) +
                 ", dim im(red2) = " + std::to_string(im_red2_dim));
    if (!rep.pass) return rep;

    std::vector<gf2::Word> im_basis;
    for (int p : im_red2_pivots(m, false)) im_basis.push_back(m.red2.col(p));
    std::vector<gf2::Word> v_basis;
    for (int p : im_red2_pivots(m, true)) v_basis.push_back(m.red2.col(p));

    // invariant 3: Wu-Cartan consistency on basis tuples
    for (int i = 0; i < m.dim_w; ++i) {
        gf2::Word w = gf2::Word{1} << i;
        for (gf2::Word r : im_basis) {
            bool lhs = m.T.eval(m.v2, w, r);
            bool rhs = m.T.eval(w, w, r) ^ m.T.eval(w, r, r);
            if (lhs != rhs)
                fail("wu-cartan", "w = " + word_str(w, m.dim_w) + ", r = " + word_str(r, m.dim_w));
        }
    }

    // invariant 4: integral triple products against torsion classes vanish
    for (gf2::Word r : im_basis)
        for (gf2::Word r2 : im_basis)
            for (gf2::Word v : v_basis)
                if (m.T.eval(r, r2, v))
                    fail("torsion-vanishing", "r = " + word_str(r, m.dim_w) + ", r' = " +
                                                  word_str(r2, m.dim_w) + ", v = " +
                                                  word_str(v, m.dim_w));

    // invariant 5: c1 present iff bock(v2) = 0, and c1 lifts v2
    Elem bv2 = m.H3.zero();
    for (int i = 0; i < m.dim_w; ++i)
        if (gf2::get_bit(m.v2, i)) bv2 = m.H3.add(bv2, bock_column(m, i));
    bool v2_lifts = m.H3.is_zero(bv2);
    if (m.c1.has_value() != v2_lifts)
        fail("spin-c", v2_lifts ? "bock(v2) = 0 but c1 absent" : "bock(v2) != 0 but c1 present");
    if (m.c1 && red2_apply(m, *m.c1) != m.v2)
        fail("spin-c", "red2(c1) != v2");

    return rep;
}

Model::Model(SixManifoldModel m) : m_(std::move(m)) {
    ValidationReport rep = validate(m_);
    if (!rep.pass) throw InvalidModel("invalid model:\n" + rep.describe());
    for (int p : im_red2_pivots(m_, false)) {
        im_basis_.push_back(m_.red2.col(p));
        Elem e = m_.H2.zero();
        e[p] = 1;
        im_section_.push_back(std::move(e));
    }
    for (int p : im_red2_pivots(m_, true)) {
        v_basis_.push_back(m_.red2.col(p));
        Elem e = m_.H2.zero();
        e[p] = 1;
        v_section_.push_back(std::move(e));
    }
}

gf2::Word Model::red2_of(const Elem& e) const { return red2_apply(m_, m_.H2.reduce(e)); }

Elem Model::bock_of(gf2::Word w) const {
    Elem b = m_.H3.zero();
    for (int i = 0; i < m_.dim_w; ++i)
        if (gf2::get_bit(w, i)) b = m_.H3.add(b, bock_column(m_, i));
    return b;
}

bool TorsionFunctional::is_zero() const {
    for (uint8_t c : coeffs)
        if (c) return false;
    return true;
}

TorsionFunctional beta_square_functional(const Model& m, gf2::Word x) {
    TorsionFunctional f;
    for (gf2::Word v : m.v_basis()) f.coeffs.push_back(m.triple(x, x, v));
    return f;
}

TorsionFunctional beta_times_functional(const Model& m, gf2::Word x, const Elem& e) {
    gf2::Word re = m.red2_of(e);
    TorsionFunctional f;
    for (gf2::Word v : m.v_basis()) f.coeffs.push_back(m.triple(x, re, v));
    return f;
}

}  // namespace perind
