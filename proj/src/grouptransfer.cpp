#include "perind/grouptransfer.hpp"

#include <algorithm>
#include <map>

namespace perind {

FiniteGroupTable FiniteGroupTable::from_table(std::vector<std::vector<int>> table) {
    const int n = static_cast<int>(table.size());
    if (n < 1 || n > kMaxOrder) throw MalformedInput("group table: order out of range");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw MalformedInput("group table: not square");
        for (int v : row)
            if (v < 0 || v >= n) throw MalformedInput("group table: entry out of range");
    }

    // rows and columns must be permutations (cancellativity)
    for (int i = 0; i < n; ++i) {
        std::vector<uint8_t> seen_r(n, 0), seen_c(n, 0);
        for (int j = 0; j < n; ++j) {
            if (seen_r[table[i][j]]++) throw MalformedInput("group table: repeated row entry");
            if (seen_c[table[j][i]]++) throw MalformedInput("group table: repeated column entry");
        }
    }

    int e = -1;
    for (int i = 0; i < n && e < 0; ++i) {
        bool ok = true;
        for (int j = 0; j < n; ++j) ok = ok && table[i][j] == j && table[j][i] == j;
        if (ok) e = i;
    }
    if (e < 0) throw MalformedInput("group table: no identity element");

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw MalformedInput("group table: not associative");

    FiniteGroupTable g;
    g.n_ = n;
    g.e_ = e;
    g.table_ = std::move(table);
    g.inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.table_[a][b] == e) g.inv_[a] = b;
    return g;
}

int FiniteGroupTable::pow(int a, long long k) const {
    if (k < 0) return pow(inv(a), -k);
    int r = e_;
    while (k--) r = mul(r, a);
    return r;
}

long long FiniteGroupTable::element_order(int a) const {
    long long o = 1;
    int g = a;
    while (g != e_) {
        g = mul(g, a);
        ++o;
    }
    return o;
}

bool FiniteGroupTable::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < a; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

FiniteGroupTable build_semidirect(long long n, long long k) {
    if (n < 1 || 2 * n > FiniteGroupTable::kMaxOrder)
        throw MalformedInput("semidirect: order out of range");
    k %= n;
    if (k < 0) k += n;
    if ((k * k) % n != 1 % n) throw MalformedInput("semidirect: k^2 != 1 (mod n)");

    const int nn = static_cast<int>(n);
    auto idx = [nn](long long i, long long e) { return static_cast<int>(i % nn + nn * e); };
    std::vector<std::vector<int>> t(2 * nn, std::vector<int>(2 * nn));
    for (long long i = 0; i < nn; ++i)
        for (long long e = 0; e < 2; ++e)
            for (long long j = 0; j < nn; ++j)
                for (long long f = 0; f < 2; ++f)
                    // (a^i b^e)(a^j b^f) = a^{i + j k^e} b^{e+f}
                    t[idx(i, e)][idx(j, f)] = idx(i + j * (e ? k : 1), (e + f) % 2);
    return FiniteGroupTable::from_table(std::move(t));
}

FgAbelianGroup invariant_factors_from_table(const FiniteGroupTable& g) {
    if (!g.is_abelian()) throw PreconditionError("invariant factors: table is not abelian");
    const long long n = g.order();

    // exponent multiset per prime from the census N_{p^i} = #{x : x^{p^i} = e}
    std::map<long long, std::vector<int>, std::greater<>> prime_exps;
    long long rest = n;
    for (long long p = 2; p * p <= rest; ++p)
        while (rest % p == 0) {
            prime_exps[p];
            rest /= p;
        }
    if (rest > 1) prime_exps[rest];

    for (auto& [p, exps] : prime_exps) {
        long long pk = 1;
        int prev_log = 0;
        std::vector<int> at_least;  // at_least[i-1] = #{factors with exponent >= i}
        while (true) {
            pk = checked_mul(pk, p);
            long long count = 0;
            for (int a = 0; a < g.order(); ++a)
                if (g.pow(a, pk) == g.identity()) ++count;
            int lg = 0;
            for (long long c = count; c > 1; c /= p) ++lg;
            if (lg == prev_log) break;
            at_least.push_back(lg - prev_log);
            prev_log = lg;
        }
        for (size_t i = 0; i < at_least.size(); ++i)
            for (int j = static_cast<int>(exps.size()); j < at_least[i]; ++j) exps.push_back(0);
        for (size_t i = 0; i < at_least.size(); ++i)
            for (int j = 0; j < at_least[i]; ++j) ++exps[j];
        std::sort(exps.begin(), exps.end(), std::greater<>());
    }

    // pair the largest prime-power pieces into the largest invariant factor
    size_t m = 0;
    for (auto& [p, exps] : prime_exps) m = std::max(m, exps.size());
    std::vector<long long> factors;
    for (size_t i = 0; i < m; ++i) {
        long long d = 1;
        for (auto& [p, exps] : prime_exps)
            if (i < exps.size())
                for (int j = 0; j < exps[i]; ++j) d = checked_mul(d, p);
        factors.push_back(d);
    }
    std::reverse(factors.begin(), factors.end());  // ascending: d_1 | d_2 | ...

    FgAbelianGroup out;
    for (long long d : factors)
        if (d >= 2) out.factors.push_back(d);
    out.check_normal_form();
    return out;
}

namespace {

// subgroup generated by the given elements, as a sorted element list
std::vector<int> generated_subgroup(const FiniteGroupTable& g, std::vector<int> gens) {
    std::vector<uint8_t> in(g.order(), 0);
    std::vector<int> queue{g.identity()};
    in[g.identity()] = 1;
    for (int x : gens)
        if (!in[x]) {
            in[x] = 1;
            queue.push_back(x);
        }
    for (size_t i = 0; i < queue.size(); ++i)
        for (size_t j = 0; j < queue.size(); ++j) {
            int p = g.mul(queue[i], queue[j]);
            if (!in[p]) {
                in[p] = 1;
                queue.push_back(p);
            }
        }
    std::sort(queue.begin(), queue.end());
    return queue;
}

Presentation abelianization_by_relations(const FiniteGroupTable& g) {
    const int n = g.order();
    Mat rel(n * n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            long long* row = &rel.at(a * n + b, 0);
            row[a] += 1;
            row[b] += 1;
            row[g.mul(a, b)] -= 1;
        }
    return group_from_relations(rel, n);
}

}  // namespace

Abelianization abelianization(const FiniteGroupTable& g) {
    Abelianization ab;

    // table path: quotient by the closure of the commutators
    std::vector<int> comms;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            comms.push_back(g.mul(g.mul(a, b), g.inv(g.mul(b, a))));
    ab.commutator = generated_subgroup(g, std::move(comms));

    std::vector<uint8_t> in_k(g.order(), 0);
    for (int x : ab.commutator) in_k[x] = 1;
    ab.coset_of.assign(g.order(), -1);
    std::vector<int> coset_rep;
    for (int a = 0; a < g.order(); ++a) {
        if (ab.coset_of[a] >= 0) continue;
        int id = static_cast<int>(coset_rep.size());
        coset_rep.push_back(a);
        for (int k : ab.commutator) ab.coset_of[g.mul(a, k)] = id;
    }
    const int q = static_cast<int>(coset_rep.size());
    std::vector<std::vector<int>> qt(q, std::vector<int>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) qt[i][j] = ab.coset_of[g.mul(coset_rep[i], coset_rep[j])];
    FgAbelianGroup table_factors = invariant_factors_from_table(FiniteGroupTable::from_table(qt));

    // matrix path
    ab.pres = abelianization_by_relations(g);
    ab.group = ab.pres.group;

    // the two paths must agree on the group and on which elements die
    if (!(table_factors == ab.group) || ab.group.free_rank != 0)
        invariant_violation("abelianization: table and relation-matrix paths disagree");
    for (int a = 0; a < g.order(); ++a)
        if ((ab.coset_of[a] == ab.coset_of[g.identity()]) !=
            ab.group.is_zero(abelianized(ab, a)))
            invariant_violation("abelianization: projection kernels disagree");
    return ab;
}

Elem abelianized(const Abelianization& ab, int g) {
    Elem e(ab.group.rank());
    for (int i = 0; i < ab.group.rank(); ++i) e[i] = ab.pres.projection.matrix.at(i, g);
    return ab.group.reduce(std::move(e));
}

int IndexTwoData::h_index(int elem) const {
    auto it = std::lower_bound(h_elems.begin(), h_elems.end(), elem);
    if (it == h_elems.end() || *it != elem)
        throw PreconditionError("index-2 subgroup: element not in H");
    return static_cast<int>(it - h_elems.begin());
}

IndexTwoData make_index_two(const FiniteGroupTable& g, const std::vector<uint8_t>& character) {
    if (static_cast<int>(character.size()) != g.order())
        throw MalformedInput("index-2 subgroup: character size mismatch");
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (((character[a] ^ character[b]) & 1) != (character[g.mul(a, b)] & 1))
                throw PreconditionError("index-2 subgroup: character is not a homomorphism");
    IndexTwoData d;
    d.g = g;
    d.character = character;
    for (int a = 0; a < g.order(); ++a)
        if (!(character[a] & 1)) d.h_elems.push_back(a);
    if (2 * static_cast<int>(d.h_elems.size()) != g.order())
        throw PreconditionError("index-2 subgroup: character is not surjective");
    d.rep = 0;
    while (!(character[d.rep] & 1)) ++d.rep;
    return d;
}

namespace {

FiniteGroupTable subgroup_table(const IndexTwoData& d) {
    const int m = static_cast<int>(d.h_elems.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            t[i][j] = d.h_index(d.g.mul(d.h_elems[i], d.h_elems[j]));
    return FiniteGroupTable::from_table(std::move(t));
}

}  // namespace

std::vector<Elem> transfer_images_with_rep(const IndexTwoData& d, const Abelianization& h_ab,
                                           int rep) {
    if (rep < 0 || rep >= d.g.order() || !(d.character[rep] & 1))
        throw PreconditionError("transfer: representative must lie outside H");
    std::vector<Elem> img;
    for (int g = 0; g < d.g.order(); ++g) {
        if (!(d.character[g] & 1)) {
            int cg = d.g.conj(g, rep);  // in H: index-2 subgroups are normal
            img.push_back(h_ab.group.add(abelianized(h_ab, d.h_index(g)),
                                         abelianized(h_ab, d.h_index(cg))));
        } else {
            img.push_back(abelianized(h_ab, d.h_index(d.g.mul(g, g))));
        }
    }
    return img;
}

TransferResult transfer_index2(const IndexTwoData& d) {
    TransferResult t;
    t.g_ab = abelianization(d.g);
    t.h_ab = abelianization(subgroup_table(d));
    t.element_image = transfer_images_with_rep(d, t.h_ab, d.rep);

    // independent of the coset representative
    for (int r = d.rep + 1; r < d.g.order(); ++r) {
        if (!(d.character[r] & 1)) continue;
        std::vector<Elem> other = transfer_images_with_rep(d, t.h_ab, r);
        for (int g = 0; g < d.g.order(); ++g)
            if (!t.h_ab.group.equal(other[g], t.element_image[g]))
                invariant_violation("transfer: image depends on the coset representative");
    }

    // additive on the nose; the transfer is a homomorphism out of G_ab
    for (int a = 0; a < d.g.order(); ++a)
        for (int b = 0; b < d.g.order(); ++b) {
            Elem sum = t.h_ab.group.add(t.element_image[a], t.element_image[b]);
            if (!t.h_ab.group.equal(sum, t.element_image[d.g.mul(a, b)]))
                invariant_violation("transfer: images are not additive");
        }

    // matrix on G_ab generators via the recorded free-group preimages
    t.map.domain = t.g_ab.group;
    t.map.codomain = t.h_ab.group;
    t.map.matrix = Mat(t.h_ab.group.rank(), t.g_ab.group.rank());
    for (int i = 0; i < t.g_ab.group.rank(); ++i) {
        Elem col = t.h_ab.group.zero();
        for (int g = 0; g < d.g.order(); ++g) {
            long long c = t.g_ab.pres.generator_preimage.at(g, i);
            if (c) col = t.h_ab.group.add(col, t.h_ab.group.scale(c, t.element_image[g]));
        }
        for (int r = 0; r < t.h_ab.group.rank(); ++r) t.map.matrix.at(r, i) = col[r];
    }
    t.map.check_well_defined();
    for (int g = 0; g < d.g.order(); ++g)
        if (!t.h_ab.group.equal(t.map.apply(abelianized(t.g_ab, g)), t.element_image[g]))
            invariant_violation("transfer: matrix disagrees with element images");
    return t;
}

}  // namespace perind
