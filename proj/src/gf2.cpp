#include "perind/gf2.hpp"

#include <algorithm>

namespace perind::gf2 {

BitMat BitMat::transposed() const {
    BitMat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (get(i, j)) t.set(j, i, true);
    return t;
}

bool BitMat::is_symmetric() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < cols; ++j)
            if (get(i, j) != get(j, i)) return false;
    return true;
}

int rank(BitMat m) {
    int r = 0;
    for (int j = 0; j < m.cols && r < m.rows; ++j) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.get(i, j)) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m.row[piv], m.row[r]);
        for (int i = 0; i < m.rows; ++i)
            if (i != r && m.get(i, j)) m.row[i] ^= m.row[r];
        ++r;
    }
    return r;
}

std::optional<Solutions> solve(const BitMat& m, Word b) {
    // augmented column lives at bit position m.cols
    std::vector<Word> rows(m.row);
    for (int i = 0; i < m.rows; ++i)
        if (get_bit(b, i)) rows[i] |= Word{1} << m.cols;

    std::vector<int> pivot_col;
    int r = 0;
    for (int j = 0; j < m.cols && r < m.rows; ++j) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (get_bit(rows[i], j)) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[r]);
        for (int i = 0; i < m.rows; ++i)
            if (i != r && get_bit(rows[i], j)) rows[i] ^= rows[r];
        pivot_col.push_back(j);
        ++r;
    }
    for (int i = r; i < m.rows; ++i)
        if (get_bit(rows[i], m.cols)) return std::nullopt;

    Solutions s;
    for (int k = 0; k < r; ++k)
        if (get_bit(rows[k], m.cols)) s.particular |= Word{1} << pivot_col[k];

    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int j = 0; j < m.cols; ++j) {
        if (is_pivot[j]) continue;
        Word v = Word{1} << j;
        for (int k = 0; k < r; ++k)
            if (get_bit(rows[k], j)) v |= Word{1} << pivot_col[k];
        s.nullspace.push_back(v);
    }
    return s;
}

std::vector<Word> nullspace(const BitMat& m) {
    auto s = solve(m, 0);
    return s->nullspace;
}

Word min_in_coset(Word p, std::vector<Word> basis) {
    // reduce basis so each vector has a distinct highest set bit
    std::vector<Word> echelon;
    for (Word v : basis) {
        for (Word e : echelon) {
            Word msb = Word{1} << (31 - __builtin_clz(e));
            if (v & msb) v ^= e;
        }
        if (v) echelon.push_back(v);
    }
    std::sort(echelon.begin(), echelon.end(), std::greater<>());
    for (Word e : echelon)
        if (p & (Word{1} << (31 - __builtin_clz(e)))) p ^= e;
    return p;
}

std::optional<Word> solve_min(const BitMat& m, Word b) {
    auto s = solve(m, b);
    if (!s) return std::nullopt;
    return min_in_coset(s->particular, s->nullspace);
}

std::vector<int> independent_subset(const std::vector<Word>& vecs) {
    std::vector<int> chosen;
    std::vector<Word> echelon;
    for (int i = 0; i < static_cast<int>(vecs.size()); ++i) {
        Word v = vecs[i];
        for (Word e : echelon) {
            Word msb = Word{1} << (31 - __builtin_clz(e));
            if (v & msb) v ^= e;
        }
        if (v) {
            echelon.push_back(v);
            chosen.push_back(i);
        }
    }
    return chosen;
}

bool in_span(const std::vector<Word>& basis, Word v) {
    std::vector<Word> echelon;
    for (Word b : basis) {
        Word w = b;
        for (Word e : echelon) {
            Word msb = Word{1} << (31 - __builtin_clz(e));
            if (w & msb) w ^= e;
        }
        if (w) echelon.push_back(w);
    }
    for (Word e : echelon) {
        Word msb = Word{1} << (31 - __builtin_clz(e));
        if (v & msb) v ^= e;
    }
    return v == 0;
}

}  // namespace perind::gf2
