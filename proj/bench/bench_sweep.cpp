// Times the obstruction and verification sweeps over the standard family with the serial
// reference and with the OpenMP kernel, and checks that both give the same results.

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "hfsurg/sweep.hpp"

using namespace hfsurg;

namespace {

template <class Fn>
double seconds(const Fn& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    const auto knots = standard_family();
    const auto jobs = admissible_jobs(knots);
    std::cout << knots.size() << " knots, " << jobs.size() << " (knot, slope) jobs, " << omp_get_max_threads()
              << " threads\n";

    std::vector<Outcome<ObstructionReport>> serial, parallel;
    double ts = 0, tp = 0;
    for (int k = 0; k < repeats; ++k) {
        ts += seconds([&] { serial = obstruct_sweep(knots, jobs, Execution::Serial); });
        tp += seconds([&] { parallel = obstruct_sweep(knots, jobs, Execution::Parallel); });
    }
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        if (serial[k].ok() != parallel[k].ok() || (serial[k].ok() && serial[k].value->overall != parallel[k].value->overall)) {
            std::cerr << "serial and parallel obstruct sweeps differ at job " << k << "\n";
            return 1;
        }
    }
    std::cout << "obstruct  serial " << ts / repeats << " s   parallel " << tp / repeats << " s\n";

    std::vector<Outcome<std::string>> vs, vp;
    ts = seconds([&] { vs = verify_sweep(knots, jobs, Execution::Serial); });
    tp = seconds([&] { vp = verify_sweep(knots, jobs, Execution::Parallel); });
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        if (vs[k].value != vp[k].value) {
            std::cerr << "serial and parallel verify sweeps differ at job " << k << "\n";
            return 1;
        }
    }
    std::cout << "verify    serial " << ts << " s   parallel " << tp << " s\n";
    return 0;
}
