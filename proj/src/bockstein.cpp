#include "perind/bockstein.hpp"

#include <numeric>

namespace perind {

long long ModNModel::carrier_order() const {
    long long o = 1;
    for (long long d : tensor_orders) o = checked_mul(o, d);
    for (long long d : btors_orders) o = checked_mul(o, d);
    return o;
}

ModNModel::CElem ModNModel::reduce(CElem c) const {
    if (static_cast<int>(c.size()) != carrier_rank())
        throw MalformedInput("modn: wrong carrier coordinate count");
    for (int i = 0; i < carrier_rank(); ++i) {
        long long d = i < tensor_rank() ? tensor_orders[i] : btors_orders[i - tensor_rank()];
        c[i] %= d;
        if (c[i] < 0) c[i] += d;
    }
    return c;
}

ModNModel::CElem ModNModel::add(const CElem& a, const CElem& b) const {
    CElem r(carrier_rank());
    for (int i = 0; i < carrier_rank(); ++i) r[i] = a[i] + b[i];
    return reduce(std::move(r));
}

ModNModel::CElem ModNModel::rho(const Elem& a) const {
    A.check_element(A.reduce(a));
    CElem c = zero();
    for (int i = 0; i < A.rank(); ++i) c[i] = a[i];
    return reduce(std::move(c));
}

Elem ModNModel::beta(const CElem& c) const {
    CElem r = reduce(c);
    Elem b = B.zero();
    for (int j = 0; j < static_cast<int>(btors_orders.size()); ++j) {
        // generator j of B[n] is (e_j / gcd(e_j, n)) times B's torsion generator j
        b[j] = r[tensor_rank() + j] * (B.factors[j] / btors_orders[j]);
    }
    return B.reduce(std::move(b));
}

ModNModel::CInfElem ModNModel::iota(const CElem& c) const {
    CElem r = reduce(c);
    CInfElem out;
    // torsion tensor coordinates die in A (x) Q/Z; free ones map to t/n
    for (int i = A.torsion_rank(); i < A.rank(); ++i) out.tensor.push_back(qz(r[i], n));
    out.tb.assign(B.torsion_rank(), 0);
    for (int j = 0; j < static_cast<int>(btors_orders.size()); ++j) {
        long long v = r[tensor_rank() + j] * (B.factors[j] / btors_orders[j]);
        out.tb[j] = v % B.factors[j];
    }
    return out;
}

Elem ModNModel::beta_qz(const CInfElem& c) const {
    Elem b = B.zero();
    for (int j = 0; j < B.torsion_rank(); ++j) b[j] = c.tb[j];
    return B.reduce(std::move(b));
}

std::vector<ModNModel::CElem> ModNModel::enumerate() const {
    std::vector<long long> orders = tensor_orders;
    orders.insert(orders.end(), btors_orders.begin(), btors_orders.end());
    std::vector<CElem> out;
    CElem cur = zero();
    out.push_back(cur);
    while (true) {
        size_t i = 0;
        while (i < orders.size() && cur[i] + 1 == orders[i]) cur[i++] = 0;
        if (i == orders.size()) break;
        ++cur[i];
        out.push_back(cur);
    }
    return out;
}

ModNModel build_modn(const FgAbelianGroup& A, const FgAbelianGroup& B, long long n) {
    if (n < 2) throw MalformedInput("build_modn: n must be >= 2");
    ModNModel m;
    m.n = n;
    m.A = A;
    m.B = B;
    for (int i = 0; i < A.torsion_rank(); ++i)
        m.tensor_orders.push_back(std::gcd(A.factors[i], n));
    for (int i = 0; i < A.free_rank; ++i) m.tensor_orders.push_back(n);
    for (int j = 0; j < B.torsion_rank(); ++j)
        m.btors_orders.push_back(std::gcd(B.factors[j], n));
    return m;
}

ModNModel::CElem CoeffReduce::apply(const ModNModel::CElem& c) const {
    ModNModel::CElem r = source->reduce(c);
    ModNModel::CElem out = target->zero();
    const int tr = source->tensor_rank();
    for (int i = 0; i < tr; ++i) out[i] = r[i];
    for (int j = 0; j < static_cast<int>(source->btors_orders.size()); ++j) {
        // B[2k] -> B[2], u |-> k u; in coordinates u |-> u * k * g2 / g2k
        long long g2k = source->btors_orders[j];
        long long g2 = target->btors_orders[j];
        out[tr + j] = r[tr + j] * ((k * g2) / g2k);
    }
    return target->reduce(std::move(out));
}

CoeffReduce coeff_reduce(const ModNModel& source, const ModNModel& target) {
    if (source.A != target.A || source.B != target.B)
        throw PreconditionError("coeff_reduce: source and target must share (A, B)");
    if (source.n % 2 != 0 || target.n != 2)
        throw PreconditionError("coeff_reduce: requires source modulus 2k and target modulus 2");
    return CoeffReduce{&source, &target, source.n / 2};
}

}  // namespace perind
