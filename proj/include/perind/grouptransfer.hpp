#pragma once

#include <cstdint>
#include <vector>

#include "perind/abelian.hpp"

namespace perind {

// A finite group given by its full multiplication table. Elements are the
// indices 0..n-1; construction checks the table really is a group.
class FiniteGroupTable {
public:
    static constexpr int kMaxOrder = 512;

    FiniteGroupTable() = default;  // empty placeholder; build via from_table
    static FiniteGroupTable from_table(std::vector<std::vector<int>> table);

    int order() const { return n_; }
    int identity() const { return e_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int a, int b) const { return mul(mul(b, a), inv(b)); }  // b a b^-1
    int pow(int a, long long k) const;
    long long element_order(int a) const;
    bool is_abelian() const;

private:
    int n_ = 0;
    int e_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
};

// C_n x| C_2 with the involution acting by a |-> a^k; needs k^2 = 1 (mod n).
// Element (a^i, b^e) has index i + n e.
FiniteGroupTable build_semidirect(long long n, long long k);

// Invariant factors of an abelian table, read off the torsion-counting
// census N_k = #{g : g^k = e}; independent of any matrix algebra.
FgAbelianGroup invariant_factors_from_table(const FiniteGroupTable& g);

// G / [G,G], computed two independent ways and cross-checked:
//  - table path: close the commutators into [G,G], form the quotient table,
//    read invariant factors from the order census;
//  - matrix path: Smith form of the relation lattice { e_a + e_b - e_{ab} },
//    which also yields coordinates for every element.
struct Abelianization {
    FgAbelianGroup group;
    Presentation pres;            // matrix path; projection gives coordinates
    std::vector<int> commutator;  // elements of [G,G], increasing
    std::vector<int> coset_of;    // element -> coset index in the quotient
};
Abelianization abelianization(const FiniteGroupTable& g);

// Coordinates of element g in ab.group.
Elem abelianized(const Abelianization& ab, int g);

// An index-2 subgroup presented as the kernel of a surjective character
// G -> Z/2, with the least coset representative outside the kernel.
struct IndexTwoData {
    FiniteGroupTable g;
    std::vector<uint8_t> character;  // one bit per element
    std::vector<int> h_elems;        // kernel elements, increasing
    int rep = 0;
    int h_index(int elem) const;
};
IndexTwoData make_index_two(const FiniteGroupTable& g, const std::vector<uint8_t>& character);

// The transfer G_ab -> H_ab for an index-2 subgroup:
//   g in H  |->  [g] + [r g r^-1],   g not in H  |->  [g^2].
// Construction verifies additivity and independence of the representative.
struct TransferResult {
    Abelianization g_ab;
    Abelianization h_ab;
    std::vector<Elem> element_image;  // tau of each ambient element, H_ab coords
    GroupHom map;                     // matrix on the abelianization generators
};
TransferResult transfer_index2(const IndexTwoData& d);

// Same construction with an explicit coset representative.
std::vector<Elem> transfer_images_with_rep(const IndexTwoData& d, const Abelianization& h_ab,
                                           int rep);

}  // namespace perind
