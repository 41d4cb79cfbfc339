// Benchmark comparing the serial reference kernels against their OpenMP
// counterparts. Each kernel is run both ways on the same input; the results
// must agree, and the record reports both timings and the speedup.

#include <omp.h>

#include <torcc/farey.hpp>
#include <torcc/orbits.hpp>
#include <torcc/thurston.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

namespace {

double seconds(const std::function<void()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void report(const std::string& name, const std::string& params, double serial,
            double parallel, bool agree) {
    std::cout << "kernel=" << name << " " << params << " serial_s=" << std::fixed
              << std::setprecision(4) << serial << " parallel_s=" << parallel
              << " speedup=" << std::setprecision(2) << serial / parallel
              << " agree=" << agree << "\n";
}

}  // namespace

int main() {
    std::cout << "threads=" << omp_get_max_threads() << "\n";

    {
        std::int64_t rs = 0, rp = 0;
        double ts = seconds([&] { rs = torcc::four_point_two_delta_up_to_height(10, false); });
        double tp = seconds([&] { rp = torcc::four_point_two_delta_up_to_height(10, true); });
        report("four_point_delta", "height=10", ts, tp, rs == rp);
    }
    {
        mpz_class rs, rp;
        double ts = seconds([&] { rs = torcc::min_psi_trace_sweep(2, 7, 7, false); });
        double tp = seconds([&] { rp = torcc::min_psi_trace_sweep(2, 7, 7, true); });
        report("min_trace_sweep", "k=2 n_max=7 q_max=7", ts, tp, rs == rp);
    }
    {
        bool rs = false, rp = false;
        double ts = seconds([&] { rs = torcc::free_group_check(2, 8, 3, false); });
        double tp = seconds([&] { rp = torcc::free_group_check(2, 8, 3, true); });
        report("free_group_check", "k=2 maxlen=8 max_exp=3", ts, tp, rs == rp);
    }
    {
        torcc::AxisSweepReport rs, rp;
        double ts = seconds([&] { rs = torcc::axis_boundedness_sweep(7, 4, 2, false); });
        double tp = seconds([&] { rp = torcc::axis_boundedness_sweep(7, 4, 2, true); });
        report("axis_cf_sweep", "n=7 B=4 k=2", ts, tp,
               rs.empirical_K == rp.empirical_K && rs.classes == rp.classes);
    }
    return 0;
}
