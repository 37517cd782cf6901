#include "perind/forms2.hpp"

namespace perind::forms2 {

gf2::Word diagonal(const Z2SymForm& f) {
    gf2::Word d = 0;
    for (int i = 0; i < f.dim; ++i)
        if (f.mat.get(i, i)) d |= gf2::Word{1} << i;
    return d;
}

gf2::Word solve_diagonal(const Z2SymForm& f) {
    auto d = gf2::solve_min(f.mat, diagonal(f));
    if (!d) invariant_violation("solve_diagonal: diagonal not in column space of a symmetric matrix");
    return *d;
}

Decomposition decompose_zero_nonsingular(const Z2SymForm& f) {
    Decomposition dec;
    dec.radical = gf2::nullspace(f.mat);

    // complete the radical to a basis with standard basis vectors
    std::vector<gf2::Word> complement;
    std::vector<gf2::Word> span(dec.radical);
    for (int i = 0; i < f.dim; ++i) {
        gf2::Word e = gf2::Word{1} << i;
        if (!gf2::in_span(span, e)) {
            complement.push_back(e);
            span.push_back(e);
        }
    }

    dec.nonsingular_dim = static_cast<int>(complement.size());
    gf2::BitMat p(f.dim, f.dim);
    for (int j = 0; j < f.dim; ++j) {
        gf2::Word col = j < dec.nonsingular_dim
                            ? complement[j]
                            : dec.radical[j - dec.nonsingular_dim];
        for (int i = 0; i < f.dim; ++i) p.set(i, j, gf2::get_bit(col, i));
    }
    dec.change = p;

    gf2::BitMat block(dec.nonsingular_dim, dec.nonsingular_dim);
    for (int i = 0; i < dec.nonsingular_dim; ++i)
        for (int j = 0; j < dec.nonsingular_dim; ++j)
            block.set(i, j, f.eval(complement[i], complement[j]));
    dec.nonsingular = Z2SymForm(dec.nonsingular_dim, block);
    return dec;
}

Z2Trilinear Z2Trilinear::from_triples(int dim, const std::vector<std::array<int, 3>>& ones) {
    Z2Trilinear t(dim);
    for (const auto& [i, j, k] : ones) {
        if (i < 0 || j < 0 || k < 0 || i >= dim || j >= dim || k >= dim)
            throw MalformedInput("trilinear: triple index out of range");
        t.set_orbit(i, j, k, true);
    }
    return t;
}

void Z2Trilinear::set_orbit(int i, int j, int k, bool v) {
    int p[3] = {i, j, k};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                if (a != b && b != c && a != c) t_[idx(p[a], p[b], p[c])] = v;
}

bool Z2Trilinear::eval(gf2::Word a, gf2::Word b, gf2::Word c) const {
    int s = 0;
    for (int i = 0; i < dim_; ++i) {
        if (!gf2::get_bit(a, i)) continue;
        for (int j = 0; j < dim_; ++j) {
            if (!gf2::get_bit(b, j)) continue;
            for (int k = 0; k < dim_; ++k)
                if (gf2::get_bit(c, k)) s ^= t_[idx(i, j, k)];
        }
    }
    return s;
}

std::vector<std::array<int, 3>> Z2Trilinear::nonzero_triples() const {
    std::vector<std::array<int, 3>> out;
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            for (int k = j; k < dim_; ++k)
                if (get(i, j, k)) out.push_back({i, j, k});
    return out;
}

Z2SymForm form_from_trilinear(const Z2Trilinear& t, gf2::Word x,
                              const std::vector<gf2::Word>& basis) {
    const int n = static_cast<int>(basis.size());
    if (gf2::independent_subset(basis).size() != basis.size())
        throw MalformedInput("form_from_trilinear: basis not linearly independent");
    gf2::BitMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            bool v = t.eval(basis[i], x, basis[j]);
            m.set(i, j, v);
            m.set(j, i, v);
        }
    return Z2SymForm(n, m);
}

}  // namespace perind::forms2
