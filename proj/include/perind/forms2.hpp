#pragma once

#include <array>
#include <vector>

#include "perind/gf2.hpp"

namespace perind::forms2 {

// Symmetric bilinear form over GF(2).
struct Z2SymForm {
    int dim = 0;
    gf2::BitMat mat;

    Z2SymForm() = default;
    Z2SymForm(int d, gf2::BitMat m) : dim(d), mat(std::move(m)) {
        if (mat.rows != d || mat.cols != d) throw MalformedInput("form: matrix shape");
        if (!mat.is_symmetric()) throw MalformedInput("form: matrix not symmetric");
    }
    bool eval(gf2::Word v, gf2::Word w) const { return gf2::parity(w & mat.mul_vec(v)); }
};

// diag(A) as a vector; equals the characteristic functional gamma(lambda).
gf2::Word diagonal(const Z2SymForm& f);

// Witness d with A d = diag(A); the minimal solution under sum d_i 2^i.
// Solvability is a theorem, so failure aborts.
gf2::Word solve_diagonal(const Z2SymForm& f);

// Invertible P with P^T A P = (nonsingular block) + (zero block), nonsingular
// block first. Radical columns span ker(A).
struct Decomposition {
    gf2::BitMat change;  // columns of P
    int nonsingular_dim = 0;
    Z2SymForm nonsingular;
    std::vector<gf2::Word> radical;
};
Decomposition decompose_zero_nonsingular(const Z2SymForm& f);

// Fully symmetric trilinear tensor over GF(2), stored densely.
class Z2Trilinear {
public:
    Z2Trilinear() = default;
    explicit Z2Trilinear(int dim) : dim_(dim), t_(static_cast<size_t>(dim) * dim * dim, 0) {
        if (dim > 16) throw UnsupportedInput("trilinear: dimension too large");
    }
    // Entries are symmetrized over all slot permutations of each triple.
    static Z2Trilinear from_triples(int dim, const std::vector<std::array<int, 3>>& ones);

    int dim() const { return dim_; }
    bool get(int i, int j, int k) const { return t_[idx(i, j, k)]; }
    void set_orbit(int i, int j, int k, bool v);
    bool eval(gf2::Word a, gf2::Word b, gf2::Word c) const;
    std::vector<std::array<int, 3>> nonzero_triples() const;  // i <= j <= k
    friend bool operator==(const Z2Trilinear&, const Z2Trilinear&) = default;

private:
    size_t idx(int i, int j, int k) const {
        return (static_cast<size_t>(i) * dim_ + j) * dim_ + k;
    }
    int dim_ = 0;
    std::vector<uint8_t> t_;
};

// The slice (b_i, x, b_j) of T restricted to an independent subspace basis.
Z2SymForm form_from_trilinear(const Z2Trilinear& t, gf2::Word x,
                              const std::vector<gf2::Word>& basis);

}  // namespace perind::forms2
