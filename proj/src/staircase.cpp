#include "hfsurg/staircase.hpp"

#include <algorithm>
#include <numeric>

#include "hfsurg/complex_ops.hpp"

namespace hfsurg {

namespace {

BifilteredComplex unknot_complex() {
    return BifilteredComplex({Generator{"x0", 0, 0, 0}}, {{}}, {0});
}

}  // namespace

StaircaseKnot::StaircaseKnot() : complex_(unknot_complex()) {}

std::int64_t StaircaseKnot::brute_force_V(int s) const {
    const auto a_plus = plus_bottom(complex_, [s](int i, int j) { return std::max(i, j - s); });
    const auto b_plus = plus_bottom(complex_, [](int i, int) { return i; });
    return (b_plus - a_plus) / 2;
}

std::int64_t StaircaseKnot::brute_force_H(int s) const {
    const auto a_plus = plus_bottom(complex_, [s](int i, int j) { return std::max(i, j - s); });
    const auto column = plus_bottom(complex_, [s](int, int j) { return j - s; });
    return (column - a_plus) / 2;
}

std::int64_t StaircaseKnot::V(int s) const {
    if (s >= genus_) return 0;
    if (s <= -genus_) return -s;
    return v_.at(s);
}

std::int64_t StaircaseKnot::H(int s) const {
    if (s >= genus_) return s;
    if (s <= -genus_) return 0;
    return h_.at(s);
}

std::int64_t StaircaseKnot::min_VH(int s) const { return std::min(V(s), H(s)); }

StaircaseKnot staircase_from_steps(const std::vector<int>& steps) {
    if (steps.size() % 2 != 0) throw InputError("staircase needs an even number of steps");
    if (std::any_of(steps.begin(), steps.end(), [](int l) { return l <= 0; })) {
        throw InputError("staircase steps must be positive");
    }
    if (!std::equal(steps.begin(), steps.end(), steps.rbegin())) throw InputError("staircase steps must be palindromic");

    StaircaseKnot knot;
    if (steps.empty()) return knot;

    const int total = std::accumulate(steps.begin(), steps.end(), 0);
    const int g = total / 2;
    const std::size_t count = steps.size() + 1;

    std::vector<Generator> gens;
    std::vector<std::vector<std::size_t>> diff(count);
    std::map<int, std::int64_t> coeffs;
    int i = 0;
    int j = g;
    for (std::size_t m = 0; m < count; ++m) {
        gens.push_back(Generator{"x" + std::to_string(m), i, j, m % 2 == 0 ? 0 : 1});
        coeffs[j - i] = m % 2 == 0 ? 1 : -1;
        if (m + 1 == count) break;
        // Odd generators are the sources: a horizontal arrow back to x_{m-1} and a
        // vertical arrow down to x_{m+1}.
        if (m % 2 == 0) {
            i += steps[m];
        } else {
            j -= steps[m];
        }
    }
    for (std::size_t m = 1; m < count; m += 2) diff[m] = {m - 1, m + 1};
    std::vector<std::size_t> flip(count);
    for (std::size_t m = 0; m < count; ++m) flip[m] = count - 1 - m;

    knot.genus_ = g;
    knot.steps_ = steps;
    knot.alexander_ = SymmetricLaurent(std::move(coeffs));
    knot.complex_ = BifilteredComplex(std::move(gens), std::move(diff), std::move(flip));
    for (int s = -g; s <= g; ++s) {
        knot.v_[s] = knot.brute_force_V(s);
        knot.h_[s] = knot.brute_force_H(s);
    }
    return knot;
}

bool is_lspace_admissible(const SymmetricLaurent& alexander) {
    int expected = 1;
    for (auto it = alexander.coefficients().rbegin(); it != alexander.coefficients().rend(); ++it) {
        if (it->second != expected) return false;
        expected = -expected;
    }
    return true;
}

StaircaseKnot staircase_from_alexander(const SymmetricLaurent& alexander) {
    if (!is_lspace_admissible(alexander)) {
        throw InputError("Alexander polynomial " + alexander.to_string() +
                         " is not an L-space knot candidate (coefficients must be ±1 with alternating signs)");
    }
    std::vector<int> exponents;
    for (auto it = alexander.coefficients().rbegin(); it != alexander.coefficients().rend(); ++it) {
        exponents.push_back(it->first);
    }
    std::vector<int> steps;
    for (std::size_t k = 1; k < exponents.size(); ++k) steps.push_back(exponents[k - 1] - exponents[k]);
    return staircase_from_steps(steps);
}

std::map<int, std::int64_t> torsion_coefficients(const SymmetricLaurent& alexander) {
    std::map<int, std::int64_t> out;
    const int g = alexander.genus();
    for (int s = 0; s <= g; ++s) {
        std::int64_t t = 0;
        for (int j = 1; s + j <= g; ++j) t += j * alexander.coefficient(s + j);
        out[s] = t;
    }
    return out;
}

int nu(const StaircaseKnot& knot) {
    const auto& cx = knot.complex();
    const auto b = b_hat(cx);
    const int g = knot.genus();
    for (int s = -g - 1; s <= g + 1; ++s) {
        const auto a = a_hat(cx, s);
        if (induced_rank(a.complex, b.complex, v_hat_map(a, b, cx)) > 0) return s;
    }
    throw std::logic_error("nu: v̂_s vanishes on the whole search range");
}

std::vector<StaircaseKnot> all_staircases_of_genus(int genus) {
    std::vector<StaircaseKnot> out;
    if (genus <= 0) return out;
    // Compositions of g give the first half of the palindromic step sequence.
    for (unsigned mask = 0; mask < (1u << (genus - 1)); ++mask) {
        std::vector<int> half;
        int run = 1;
        for (int b = 0; b < genus - 1; ++b) {
            if (mask & (1u << b)) {
                half.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        half.push_back(run);
        std::vector<int> steps = half;
        steps.insert(steps.end(), half.rbegin(), half.rend());
        out.push_back(staircase_from_steps(steps));
    }
    return out;
}

}  // namespace hfsurg
