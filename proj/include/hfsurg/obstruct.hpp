#pragma once

// Reducibility obstructions from Spin^c periodicity of Floer data.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hfsurg/cone.hpp"

namespace hfsurg {

enum class Verdict { Obstructed, NotObstructed, Inconclusive, OutOfRange };

std::string to_string(Verdict v);

// Two classes whose data differ, smaller residue first, and the data line that differs.
struct Witness {
    int first = 0;
    int second = 0;
    std::string line;

    bool operator==(const Witness&) const = default;
};

struct PeriodicityResult {
    Verdict verdict = Verdict::NotObstructed;
    std::optional<Witness> witness;
};

// Verdict for one candidate summand order r (lens summand of order |p| / r).
struct OrderVerdict {
    int r = 1;
    Verdict verdict = Verdict::Inconclusive;
    std::string method;
    std::optional<Witness> witness;
};

struct SlopeVerdict {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<OrderVerdict> orders;
};

struct ObstructionReport {
    std::string knot;
    int genus = 0;
    int p = 0;
    std::vector<OrderVerdict> orders;
    Verdict overall = Verdict::Inconclusive;
    std::string note;
    std::string caveat;
};

// Divisors r of |p| with |p| / r >= 2, ascending.
std::vector<int> candidate_orders(int p);

// Compares every class [s] with [s + r].
PeriodicityResult periodicity_test(const HatTable& table, int r);
PeriodicityResult periodicity_test(const PlusTable& table, int r);

// Requires 1 < |p| <= 2g - 1. Obstructs every r when p does not divide 2g - 1, otherwise
// inconclusive.
SlopeVerdict divisibility_obstruction(const StaircaseKnot& knot, int p);

// The class [s] with dim HF^([s - 1]) > dim HF^([s]); throws if it is not unique.
int descent_class(const HatTable& table);

// Requires p | 2g - 1 and 1 < |p| <= 2g - 1.
SlopeVerdict graded_slope_eliminator(const StaircaseKnot& knot, int p);

// dim Â_0 of a genus one knot: more than 1 obstructs every positive slope.
Verdict genus_one_check(std::size_t a0_dim);

struct TwoSlopesResult {
    bool two_surgery_relation = false;    // dim Â_{-1} + dim Â_1 + 1 - 2 rank θ = dim Â_0
    bool three_surgery_relation = false;  // dim Â_{-1} = dim Â_0 = dim Â_1
    Verdict verdict = Verdict::Obstructed;
    std::string reason;
};

// dims = (dim Â_{-1}, dim Â_0, dim Â_1) of a genus two knot with reducing slopes 2 and 3.
TwoSlopesResult two_slopes_check(const std::array<std::size_t, 3>& dims, int rank_theta);

ObstructionReport full_report(const KnotModel& knot, int p);
ObstructionReport full_report(const KnotSpec& spec, int p);

}  // namespace hfsurg
