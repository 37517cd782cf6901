#pragma once

#include <optional>
#include <vector>

#include "perind/intmat.hpp"
#include "perind/rational.hpp"

namespace perind {

// Element coordinates: one entry per torsion generator (reduced mod its
// invariant factor, torsion generators first) followed by one integer per
// free generator.
using Elem = std::vector<long long>;

// Finitely generated abelian group in invariant-factor normal form.
struct FgAbelianGroup {
    std::vector<long long> factors;  // d_1 | d_2 | ... , each >= 2
    int free_rank = 0;

    int torsion_rank() const { return static_cast<int>(factors.size()); }
    int rank() const { return torsion_rank() + free_rank; }
    bool is_trivial() const { return factors.empty() && free_rank == 0; }
    bool is_torsion() const { return free_rank == 0; }
    long long torsion_order() const;
    long long exponent() const { return factors.empty() ? 1 : factors.back(); }

    void check_normal_form() const;
    // Throws MalformedInput on wrong length or out-of-range torsion coordinate.
    void check_element(const Elem& g) const;
    Elem reduce(Elem g) const;
    Elem zero() const { return Elem(rank(), 0); }
    Elem add(const Elem& a, const Elem& b) const;
    Elem scale(long long k, const Elem& g) const;
    bool equal(const Elem& a, const Elem& b) const;
    bool is_zero(const Elem& g) const;

    // All elements of the torsion subgroup, deterministic mixed-radix order.
    std::vector<Elem> torsion_elements() const;

    friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;
};

// Homomorphism given by its matrix on generator coordinates: column j is the
// image of generator j of the domain.
struct GroupHom {
    FgAbelianGroup domain;
    FgAbelianGroup codomain;
    Mat matrix;  // codomain.rank() x domain.rank()

    Elem apply(const Elem& g) const;
    // Column for a generator of order d must be killed by d in the codomain.
    void check_well_defined() const;
};

struct Presentation {
    FgAbelianGroup group;
    GroupHom projection;      // from the free group on the given generators
    Mat generator_preimage;   // n_generators x group.rank(); column i is a
                              // free-group preimage of generator i
};

// Cokernel of the row lattice of `relations` acting on Z^n_generators.
Presentation group_from_relations(const Mat& relations, int n_generators);

struct OrderResult {
    bool finite = true;
    long long order = 1;  // meaningful only when finite
};
OrderResult element_order(const FgAbelianGroup& g, const Elem& e);
// Throws UnsupportedInput when the order is infinite.
long long finite_order(const FgAbelianGroup& g, const Elem& e);

struct TorsionStructure {
    FgAbelianGroup torsion;
    GroupHom torsion_inclusion;
    FgAbelianGroup n_torsion;  // G[n]
    GroupHom n_torsion_inclusion;
    FgAbelianGroup dual;  // TG^ = Hom(TG, Q/Z); same invariant factors as TG
    // Evaluation pairing TG x TG^ -> Q/Z on generators: eval[i][j] = <g_i, f_j>.
    std::vector<std::vector<QZ>> eval;
};

TorsionStructure torsion_structure(const FgAbelianGroup& g, long long n);

}  // namespace perind
