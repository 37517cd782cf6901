#pragma once

#include <cstdint>
#include <vector>

#include "perind/examplemodels.hpp"

namespace perind {

// Exhaustive check of the diagonal-solvability theorem over every symmetric
// GF(2) matrix of size 0..max_dim. The checksum folds each witness in with a
// commutative sum, so serial and parallel runs must agree exactly.
struct DiagonalSweepStats {
    long long matrices = 0;
    long long failures = 0;
    uint64_t checksum = 0;
    friend bool operator==(const DiagonalSweepStats&, const DiagonalSweepStats&) = default;
};
DiagonalSweepStats diagonal_sweep_serial(int max_dim);
DiagonalSweepStats diagonal_sweep_parallel(int max_dim);

// Property sweep over every enumerated valid model: on spin^c models every
// x in W must admit the certificate class (solve_ex) and membership must
// never fail; every produced report must satisfy the arithmetic bounds.
struct TheoremSweepStats {
    long long models = 0;
    long long spin_c_models = 0;
    long long certificates = 0;           // successful solve_ex calls
    long long non_member_on_spin_c = 0;   // must stay 0
    uint64_t checksum = 0;
    friend bool operator==(const TheoremSweepStats&, const TheoremSweepStats&) = default;
};
TheoremSweepStats theorem_sweep_serial(int max_dim_w, const std::vector<long long>& factors);
TheoremSweepStats theorem_sweep_parallel(int max_dim_w, const std::vector<long long>& factors);

}  // namespace perind
