// Compares the serial reference sweeps against the OpenMP kernels and checks
// that the aggregated results agree exactly.
#include <chrono>
#include <cstdio>

#include "perind/sweep.hpp"

namespace {

template <class F>
auto timed(const char* label, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    auto result = f();
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::printf("%-28s %10.1f ms\n", label, ms);
    return result;
}

}  // namespace

int main() {
    auto d_serial = timed("diagonal sweep (serial)", [] { return perind::diagonal_sweep_serial(6); });
    auto d_par = timed("diagonal sweep (parallel)", [] { return perind::diagonal_sweep_parallel(6); });
    std::printf("  matrices=%lld failures=%lld checksum=%016llx match=%s\n", d_serial.matrices,
                d_serial.failures, static_cast<unsigned long long>(d_serial.checksum),
                d_serial == d_par ? "yes" : "NO");

    std::vector<long long> factors{2, 4};
    auto t_serial =
        timed("theorem sweep (serial)", [&] { return perind::theorem_sweep_serial(3, factors); });
    auto t_par =
        timed("theorem sweep (parallel)", [&] { return perind::theorem_sweep_parallel(3, factors); });
    std::printf("  models=%lld spin_c=%lld certificates=%lld checksum=%016llx match=%s\n",
                t_serial.models, t_serial.spin_c_models, t_serial.certificates,
                static_cast<unsigned long long>(t_serial.checksum),
                t_serial == t_par ? "yes" : "NO");

    return (d_serial == d_par && t_serial == t_par) ? 0 : 1;
}
