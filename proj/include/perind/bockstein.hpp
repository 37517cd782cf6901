#pragma once

#include <vector>

#include "perind/abelian.hpp"
#include "perind/rational.hpp"

namespace perind {

// Mod-n cohomology carrier for a pair of integral groups (A, B) with a fixed
// generator-aligned universal-coefficient splitting:
//   C_n = (A (x) Z/n) (+) B[n]
// together with rho_n : A -> C_n, beta : C_n -> B, and the Q/Z carrier
//   C_inf = (A (x) Q/Z) (+) TB with beta_qz : C_inf -> B.
struct ModNModel {
    long long n = 2;
    FgAbelianGroup A, B;

    // Cyclic order of each carrier coordinate, in the fixed generator order:
    // one per A generator (gcd(d_i, n), or n for free generators), then one
    // per torsion generator of B (gcd(e_j, n)). Orders equal to 1 are kept so
    // coordinates stay aligned with generators.
    std::vector<long long> tensor_orders;
    std::vector<long long> btors_orders;

    using CElem = std::vector<long long>;  // size tensor + btors, reduced

    int tensor_rank() const { return static_cast<int>(tensor_orders.size()); }
    int carrier_rank() const {
        return tensor_rank() + static_cast<int>(btors_orders.size());
    }
    long long carrier_order() const;
    CElem reduce(CElem c) const;
    CElem zero() const { return CElem(carrier_rank(), 0); }
    CElem add(const CElem& a, const CElem& b) const;

    CElem rho(const Elem& a) const;   // reduction A -> C_n
    Elem beta(const CElem& c) const;  // Bockstein C_n -> B

    // Element of C_inf: a Q/Z coordinate per free generator of A plus a TB part.
    struct CInfElem {
        std::vector<QZ> tensor;
        Elem tb;  // coordinates in the torsion subgroup of B
    };
    CInfElem iota(const CElem& c) const;         // multiplication by 1/n, inclusion B[n] < TB
    Elem beta_qz(const CInfElem& c) const;       // projection of TB into B

    std::vector<CElem> enumerate() const;  // all carrier elements, mixed-radix order
};

ModNModel build_modn(const FgAbelianGroup& A, const FgAbelianGroup& B, long long n);

// The natural reduction C_2k -> C_2 over the same (A, B): surjection on the
// tensor summand, multiplication by k on B[2k] -> B[2].
struct CoeffReduce {
    const ModNModel* source;
    const ModNModel* target;
    long long k;
    ModNModel::CElem apply(const ModNModel::CElem& c) const;
};
CoeffReduce coeff_reduce(const ModNModel& source, const ModNModel& target);

}  // namespace perind
