#pragma once

#include <vector>

#include "perind/abelian.hpp"
#include "perind/rational.hpp"

namespace perind {

// Bilinear pairing G x H -> Q/Z on finite abelian groups, stored by its
// values on generator pairs.
struct QZPairing {
    FgAbelianGroup left;
    FgAbelianGroup right;
    std::vector<std::vector<QZ>> values;  // left.rank() x right.rank()

    // Throws UnsupportedInput for non-torsion groups, MalformedInput when the
    // values are not well defined on the given generator orders.
    void check() const;
    QZ eval(const Elem& g, const Elem& h) const;
};

struct PerfectResult {
    bool perfect = false;
    std::vector<Elem> right_kernel;  // generators of ker(right -> left^)
    std::vector<Elem> left_kernel;   // generators of ker(left -> right^)
};

PerfectResult is_perfect(const QZPairing& phi);

// h1 == h2 decided through the pairing functionals; requires a perfect pairing.
bool equal_by_pairing(const QZPairing& phi, const Elem& h1, const Elem& h2);

// Canonical evaluation pairing TG x TG^ from torsion_structure.
QZPairing evaluation_pairing(const FgAbelianGroup& torsion_group);

}  // namespace perind
