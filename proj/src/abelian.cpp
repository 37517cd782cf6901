#include "perind/abelian.hpp"

#include <numeric>

namespace perind {

long long FgAbelianGroup::torsion_order() const {
    long long o = 1;
    for (long long d : factors) o = checked_mul(o, d);
    return o;
}

void FgAbelianGroup::check_normal_form() const {
    if (free_rank < 0) throw MalformedInput("group: negative free rank");
    for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2) throw MalformedInput("group: invariant factor < 2");
        if (i > 0 && factors[i] % factors[i - 1] != 0)
            throw MalformedInput("group: invariant factors must form a divisibility chain");
    }
}

void FgAbelianGroup::check_element(const Elem& g) const {
    if (static_cast<int>(g.size()) != rank())
        throw MalformedInput("element: wrong coordinate count");
    for (int i = 0; i < torsion_rank(); ++i)
        if (g[i] < 0 || g[i] >= factors[i])
            throw MalformedInput("element: torsion coordinate out of range");
}

Elem FgAbelianGroup::reduce(Elem g) const {
    if (static_cast<int>(g.size()) != rank())
        throw MalformedInput("element: wrong coordinate count");
    for (int i = 0; i < torsion_rank(); ++i) {
        g[i] %= factors[i];
        if (g[i] < 0) g[i] += factors[i];
    }
    return g;
}

Elem FgAbelianGroup::add(const Elem& a, const Elem& b) const {
    Elem r(rank());
    for (int i = 0; i < rank(); ++i) r[i] = checked_add(a[i], b[i]);
    return reduce(std::move(r));
}

Elem FgAbelianGroup::scale(long long k, const Elem& g) const {
    Elem r(rank());
    for (int i = 0; i < rank(); ++i) r[i] = checked_mul(k, g[i]);
    return reduce(std::move(r));
}

bool FgAbelianGroup::equal(const Elem& a, const Elem& b) const {
    return reduce(a) == reduce(b);
}

bool FgAbelianGroup::is_zero(const Elem& g) const {
    for (long long c : reduce(g))
        if (c != 0) return false;
    return true;
}

std::vector<Elem> FgAbelianGroup::torsion_elements() const {
    std::vector<Elem> out;
    Elem cur = zero();
    out.push_back(cur);
    const int k = torsion_rank();
    while (true) {
        int i = 0;
        while (i < k && cur[i] + 1 == factors[i]) cur[i++] = 0;
        if (i == k) break;
        ++cur[i];
        out.push_back(cur);
    }
    return out;
}

Elem GroupHom::apply(const Elem& g) const {
    domain.check_element(domain.reduce(g));
    return codomain.reduce(mat_vec(matrix, domain.reduce(g)));
}

void GroupHom::check_well_defined() const {
    if (matrix.rows != codomain.rank() || matrix.cols != domain.rank())
        throw MalformedInput("hom: matrix dimensions do not match groups");
    for (int j = 0; j < domain.torsion_rank(); ++j) {
        Elem col(codomain.rank());
        for (int i = 0; i < codomain.rank(); ++i) col[i] = matrix.at(i, j);
        if (!codomain.is_zero(codomain.scale(domain.factors[j], col)))
            throw MalformedInput("hom: matrix does not respect torsion orders");
    }
}

Presentation group_from_relations(const Mat& relations, int n_generators) {
    if (relations.cols != n_generators && !(relations.rows == 0 && relations.cols == 0))
        throw MalformedInput("group_from_relations: relations must have one column per generator");

    // Cokernel of the row lattice = cokernel of relations^T.
    Mat rt(n_generators, relations.rows);
    for (int i = 0; i < relations.rows; ++i)
        for (int j = 0; j < n_generators; ++j) rt.at(j, i) = relations.at(i, j);
    SmithResult s = smith_normal_form(rt);

    std::vector<int> kept;  // torsion generator indices (factor >= 2), then free
    FgAbelianGroup g;
    for (int i = 0; i < s.rank; ++i) {
        long long d = s.d.at(i, i);
        if (d >= 2) {
            g.factors.push_back(d);
            kept.push_back(i);
        }
    }
    g.free_rank = n_generators - s.rank;
    for (int i = s.rank; i < n_generators; ++i) kept.push_back(i);

    FgAbelianGroup free_group{{}, n_generators};
    Mat proj(g.rank(), n_generators);
    Mat pre(n_generators, g.rank());
    for (int r = 0; r < g.rank(); ++r)
        for (int c = 0; c < n_generators; ++c) {
            proj.at(r, c) = s.p.at(kept[r], c);
            pre.at(c, r) = s.pinv.at(c, kept[r]);
        }

    Presentation result{g, GroupHom{free_group, g, std::move(proj)}, std::move(pre)};
    return result;
}

OrderResult element_order(const FgAbelianGroup& g, const Elem& e) {
    g.check_element(e);
    for (int i = g.torsion_rank(); i < g.rank(); ++i)
        if (e[i] != 0) return {false, 0};
    long long o = 1;
    for (int i = 0; i < g.torsion_rank(); ++i) {
        long long d = g.factors[i];
        long long coord_order = d / std::gcd(d, e[i]);
        o = std::lcm(o, coord_order);
    }
    return {true, o};
}

long long finite_order(const FgAbelianGroup& g, const Elem& e) {
    OrderResult r = element_order(g, e);
    if (!r.finite) throw UnsupportedInput("element has infinite order");
    return r.order;
}

TorsionStructure torsion_structure(const FgAbelianGroup& g, long long n) {
    if (n < 1) throw MalformedInput("torsion_structure: n must be >= 1");
    TorsionStructure ts;
    const int k = g.torsion_rank();

    ts.torsion = FgAbelianGroup{g.factors, 0};
    Mat inc(g.rank(), k);
    for (int i = 0; i < k; ++i) inc.at(i, i) = 1;
    ts.torsion_inclusion = GroupHom{ts.torsion, g, std::move(inc)};

    // n-torsion of Z/d is generated by (d/gcd(d,n)) and is cyclic of order gcd(d,n)
    std::vector<long long> ngens;  // original factor index per surviving generator
    for (int i = 0; i < k; ++i) {
        long long gc = std::gcd(g.factors[i], n);
        if (gc >= 2) {
            ts.n_torsion.factors.push_back(gc);
            ngens.push_back(i);
        }
    }
    Mat ninc(g.rank(), ts.n_torsion.rank());
    for (size_t j = 0; j < ngens.size(); ++j) {
        int i = static_cast<int>(ngens[j]);
        ninc.at(i, static_cast<int>(j)) = g.factors[i] / ts.n_torsion.factors[j];
    }
    ts.n_torsion_inclusion = GroupHom{ts.n_torsion, g, std::move(ninc)};

    // Hom(Z/d, Q/Z) = Z/d: dual generator f_i sends g_i to 1/d_i
    ts.dual = ts.torsion;
    ts.eval.assign(k, std::vector<QZ>(k, QZ{}));
    for (int i = 0; i < k; ++i) ts.eval[i][i] = qz(1, g.factors[i]);
    return ts;
}

}  // namespace perind
