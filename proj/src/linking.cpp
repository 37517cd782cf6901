#include "perind/linking.hpp"

namespace perind {

void QZPairing::check() const {
    if (!left.is_torsion() || !right.is_torsion())
        throw UnsupportedInput("pairing: groups must be torsion");
    if (static_cast<int>(values.size()) != left.rank())
        throw MalformedInput("pairing: wrong value matrix shape");
    for (int i = 0; i < left.rank(); ++i) {
        if (static_cast<int>(values[i].size()) != right.rank())
            throw MalformedInput("pairing: wrong value matrix shape");
        for (int j = 0; j < right.rank(); ++j) {
            // d_i * phi(g_i, h_j) = 0 and e_j * phi(g_i, h_j) = 0 in Q/Z
            if (!is_zero(left.factors[i] * values[i][j]) ||
                !is_zero(right.factors[j] * values[i][j]))
                throw MalformedInput("pairing: value not killed by generator orders");
        }
    }
}

QZ QZPairing::eval(const Elem& g, const Elem& h) const {
    QZ v{};
    for (int i = 0; i < left.rank(); ++i)
        for (int j = 0; j < right.rank(); ++j)
            v = v + (g[i] * h[j]) * values[i][j];
    return v;
}

namespace {

// Generators of the kernel of the adjoint right -> left^.
// The adjoint sends h_j to the functional with coordinates c_ij in Z/d_i,
// where phi(g_i, h_j) = c_ij / d_i.
std::vector<Elem> adjoint_kernel(const QZPairing& phi) {
    const int k = phi.left.rank();
    const int r = phi.right.rank();
    Mat sys(k, r + k);
    for (int i = 0; i < k; ++i) {
        long long d = phi.left.factors[i];
        for (int j = 0; j < r; ++j) {
            const QZ& v = phi.values[i][j];
            sys.at(i, j) = v.num * (d / v.den);
        }
        sys.at(i, r + i) = d;
    }
    Mat ker = integer_kernel(sys);
    std::vector<Elem> gens;
    for (int c = 0; c < ker.cols; ++c) {
        Elem x(r);
        for (int j = 0; j < r; ++j) x[j] = ker.at(j, c);
        x = phi.right.reduce(std::move(x));
        if (!phi.right.is_zero(x)) gens.push_back(x);
    }
    return gens;
}

QZPairing transpose(const QZPairing& phi) {
    QZPairing t{phi.right, phi.left, {}};
    t.values.assign(phi.right.rank(), std::vector<QZ>(phi.left.rank()));
    for (int i = 0; i < phi.left.rank(); ++i)
        for (int j = 0; j < phi.right.rank(); ++j) t.values[j][i] = phi.values[i][j];
    return t;
}

}  // namespace

PerfectResult is_perfect(const QZPairing& phi) {
    phi.check();
    PerfectResult res;
    res.right_kernel = adjoint_kernel(phi);
    res.left_kernel = adjoint_kernel(transpose(phi));
    res.perfect = res.right_kernel.empty() && res.left_kernel.empty();
    return res;
}

bool equal_by_pairing(const QZPairing& phi, const Elem& h1, const Elem& h2) {
    if (!is_perfect(phi).perfect)
        throw PreconditionError("equal_by_pairing: pairing is not perfect");
    Elem a = phi.right.reduce(h1), b = phi.right.reduce(h2);
    for (int i = 0; i < phi.left.rank(); ++i) {
        Elem gi = phi.left.zero();
        gi[i] = 1;
        if (!(phi.eval(gi, a) == phi.eval(gi, b))) return false;
    }
    return true;
}

QZPairing evaluation_pairing(const FgAbelianGroup& tg) {
    if (!tg.is_torsion()) throw UnsupportedInput("evaluation_pairing: torsion group required");
    QZPairing p{tg, tg, {}};
    p.values.assign(tg.rank(), std::vector<QZ>(tg.rank()));
    for (int i = 0; i < tg.rank(); ++i) p.values[i][i] = qz(1, tg.factors[i]);
    return p;
}

}  // namespace perind
