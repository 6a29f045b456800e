#pragma once

// Fan-out of independent (knot, slope) jobs. The parallel kernel and the serial reference
// write into the same preallocated slots, so results come back in job order either way.

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "hfsurg/obstruct.hpp"

namespace hfsurg {

enum class Execution { Serial, Parallel };

template <class T>
struct Outcome {
    std::optional<T> value;
    std::string error;  // set when the job threw
    bool ok() const { return value.has_value(); }
};

namespace detail {

template <class T, class Fn>
void run_one(Outcome<T>& slot, const Fn& fn, std::size_t k) {
    try {
        slot.value = fn(k);
    } catch (const std::exception& e) {
        slot.error = e.what();
    }
}

}  // namespace detail

template <class T, class Fn>
std::vector<Outcome<T>> fan_out(std::size_t count, const Fn& fn, Execution exec) {
    std::vector<Outcome<T>> out(count);
    if (exec == Execution::Serial) {
        for (std::size_t k = 0; k < count; ++k) detail::run_one(out[k], fn, k);
        return out;
    }
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < n; ++k) detail::run_one(out[static_cast<std::size_t>(k)], fn, static_cast<std::size_t>(k));
    return out;
}

struct SweepJob {
    std::size_t knot = 0;  // index into the knot list
    int p = 0;
};

// Every slope with 1 < |p| <= 2g - 1, ascending, knot by knot.
std::vector<SweepJob> admissible_jobs(const std::vector<KnotModel>& knots);

std::vector<Outcome<ObstructionReport>> obstruct_sweep(const std::vector<KnotModel>& knots,
                                                        const std::vector<SweepJob>& jobs, Execution exec);

// Cross-engine and symmetry checks for one slope. Returns an empty string on success,
// otherwise a description of the first mismatch (knot, p, class, data line).
std::string verify_slope(const KnotModel& knot, int p);

std::vector<Outcome<std::string>> verify_sweep(const std::vector<KnotModel>& knots, const std::vector<SweepJob>& jobs,
                                               Execution exec);

// T(2, q) for odd 3 <= q <= max_q.
std::vector<KnotModel> torus2_family(int max_q);
// T(2, q) for odd 3 <= q <= 31, then T(3,4), T(3,5), T(4,5).
std::vector<KnotModel> standard_family();

}  // namespace hfsurg
