#pragma once

// Staircase model of an L-space knot and its V_s / H_s sequences.

#include <cstdint>
#include <map>
#include <vector>

#include "hfsurg/knotio.hpp"

namespace hfsurg {

class StaircaseKnot {
public:
    // Trivial sentinel (unknot): genus 0.
    StaircaseKnot();

    int genus() const { return genus_; }
    bool is_trivial() const { return genus_ == 0; }
    const SymmetricLaurent& alexander() const { return alexander_; }
    // Lengths of the staircase steps, alternating horizontal / vertical from the top.
    const std::vector<int>& steps() const { return steps_; }
    const BifilteredComplex& complex() const { return complex_; }

    // V_s and H_s for every integer s (computed by brute force for |s| <= g, where they
    // are not forced to be 0 or |s|).
    std::int64_t V(int s) const;
    std::int64_t H(int s) const;
    std::int64_t min_VH(int s) const;

    // Direct homological computation from the staircase complex for any s.
    std::int64_t brute_force_V(int s) const;
    std::int64_t brute_force_H(int s) const;

    friend StaircaseKnot staircase_from_steps(const std::vector<int>& steps);

private:
    int genus_ = 0;
    SymmetricLaurent alexander_;
    std::vector<int> steps_;
    BifilteredComplex complex_;
    std::map<int, std::int64_t> v_;
    std::map<int, std::int64_t> h_;
};

// Builds the staircase from palindromic step lengths (even count, positive entries).
StaircaseKnot staircase_from_steps(const std::vector<int>& steps);

// Requires non-zero coefficients of alternating sign, all ±1. Δ = 1 gives the trivial sentinel.
StaircaseKnot staircase_from_alexander(const SymmetricLaurent& alexander);

bool is_lspace_admissible(const SymmetricLaurent& alexander);

// t_s = sum_{j >= 1} j a_{|s|+j}, for 0 <= s <= g.
std::map<int, std::int64_t> torsion_coefficients(const SymmetricLaurent& alexander);

// min{s : v̂_s != 0 on homology}, computed from the complex; equals g for staircases.
int nu(const StaircaseKnot& knot);

// Every admissible staircase of the given genus.
std::vector<StaircaseKnot> all_staircases_of_genus(int genus);

}  // namespace hfsurg
