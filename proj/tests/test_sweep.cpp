#include <doctest.h>

#include "perind/sweep.hpp"

using namespace perind;

TEST_CASE("diagonal sweep: serial and parallel agree, count is exact") {
    DiagonalSweepStats serial = diagonal_sweep_serial(4);
    DiagonalSweepStats parallel = diagonal_sweep_parallel(4);
    CHECK(serial == parallel);
    // sum of 2^(n(n+1)/2) for n = 0..4
    CHECK(serial.matrices == 1 + 2 + 8 + 64 + 1024);
    CHECK(serial.failures == 0);
}

TEST_CASE("theorem sweep: serial and parallel agree, no spin^c failures") {
    std::vector<long long> factors{2, 4};
    TheoremSweepStats serial = theorem_sweep_serial(2, factors);
    TheoremSweepStats parallel = theorem_sweep_parallel(2, factors);
    CHECK(serial == parallel);
    CHECK(serial.models > 0);
    CHECK(serial.spin_c_models > 0);
    CHECK(serial.certificates > 0);
    CHECK(serial.non_member_on_spin_c == 0);
}
