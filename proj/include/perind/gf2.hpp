#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "perind/errors.hpp"

namespace perind::gf2 {

// Vectors over GF(2) are packed into machine words; bit i is coordinate i.
using Word = uint32_t;
constexpr int kMaxDim = 31;

inline bool get_bit(Word w, int i) { return (w >> i) & 1u; }
inline int parity(Word w) { return __builtin_popcount(w) & 1; }

struct BitMat {
    int rows = 0;
    int cols = 0;
    std::vector<Word> row;

    BitMat() = default;
    BitMat(int r, int c) : rows(r), cols(c), row(r, 0) {
        if (c > kMaxDim) throw UnsupportedInput("gf2: dimension too large");
    }

    bool get(int i, int j) const { return get_bit(row[i], j); }
    void set(int i, int j, bool v) {
        if (v) row[i] |= Word{1} << j;
        else row[i] &= ~(Word{1} << j);
    }
    // y_i = <row_i, x>
    Word mul_vec(Word x) const {
        Word y = 0;
        for (int i = 0; i < rows; ++i)
            if (parity(row[i] & x)) y |= Word{1} << i;
        return y;
    }
    Word col(int j) const {
        Word c = 0;
        for (int i = 0; i < rows; ++i)
            if (get(i, j)) c |= Word{1} << i;
        return c;
    }
    BitMat transposed() const;
    bool is_symmetric() const;
    friend bool operator==(const BitMat&, const BitMat&) = default;
};

int rank(BitMat m);

// Solution set of m x = b: particular solution plus nullspace basis.
struct Solutions {
    Word particular = 0;
    std::vector<Word> nullspace;
};
std::optional<Solutions> solve(const BitMat& m, Word b);

std::vector<Word> nullspace(const BitMat& m);

// Minimum of p + span(basis) under the integer value sum_i x_i 2^i.
Word min_in_coset(Word p, std::vector<Word> basis);

// Solution of m x = b minimizing sum_i x_i 2^i; the pinned deterministic choice.
std::optional<Word> solve_min(const BitMat& m, Word b);

// Greedy independent subset of the given vectors, in input order.
std::vector<int> independent_subset(const std::vector<Word>& vecs);

bool in_span(const std::vector<Word>& basis, Word v);

}  // namespace perind::gf2
