#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "hfsurg/algebra.hpp"

namespace oracle {

using namespace hfsurg;

inline std::int64_t truncation_depth(const MonomialTowerMap& m) {
    std::int64_t emax = 1;
    for (const auto& e : m.entries) emax = std::max(emax, e.exponent);
    return 2 * emax * static_cast<std::int64_t>(m.nodes.size()) + 4;
}

// Replace every tower by its bottom N elements and take homology over F_2.
inline GradedVectorSpace truncated_cone_homology(const MonomialTowerMap& m, std::int64_t N) {
    const std::size_t n = m.nodes.size();
    ChainComplexF2 cx;
    for (std::size_t v = 0; v < n; ++v) {
        for (std::int64_t k = 0; k < N; ++k) cx.gradings.push_back(m.nodes[v].offset + 2 * k);
    }
    cx.d = F2Matrix(cx.gradings.size(), cx.gradings.size());
    auto at = [N](std::size_t node, std::int64_t k) { return node * static_cast<std::size_t>(N) + static_cast<std::size_t>(k); };
    for (const auto& e : m.entries) {
        for (std::int64_t k = e.exponent; k < N; ++k) cx.d.toggle(at(e.to, k - e.exponent), at(e.from, k));
    }
    return chain_homology_f2(cx);
}

inline Grading truncation_ceiling(const MonomialTowerMap& m, std::int64_t N) {
    Grading lo = m.nodes.front().offset;
    for (const auto& v : m.nodes) lo = std::min(lo, v.offset);
    return lo + 2 * N - 2;
}

// Random zig-zag path of towers with consistent offsets.
inline MonomialTowerMap random_path(std::mt19937& rng, int max_nodes, int max_exponent) {
    std::uniform_int_distribution<int> count(1, max_nodes);
    std::uniform_int_distribution<int> ex(0, max_exponent);
    std::bernoulli_distribution coin;
    const int nodes = count(rng);
    MonomialTowerMap m;
    NodeKind kind = coin(rng) ? NodeKind::A : NodeKind::B;
    for (int k = 0; k < nodes; ++k) {
        m.nodes.push_back(TowerNode{kind, k, 0});
        kind = kind == NodeKind::A ? NodeKind::B : NodeKind::A;
    }
    for (int k = 0; k + 1 < nodes; ++k) {
        const std::int64_t e = ex(rng);
        const bool a_left = m.nodes[k].kind == NodeKind::A;
        const std::size_t a = a_left ? k : k + 1;
        const std::size_t b = a_left ? k + 1 : k;
        m.entries.push_back(TowerEntry{a, b, e});
        const Grading shift = 2 * e - 1;
        m.nodes[k + 1].offset = a_left ? m.nodes[k].offset + shift : m.nodes[k].offset - shift;
    }
    std::shuffle(m.entries.begin(), m.entries.end(), rng);
    return m;
}

}  // namespace oracle

namespace oracle {

// Random palindromic step sequence of genus g: a random composition of g, mirrored.
inline std::vector<int> random_steps(std::mt19937& rng, int g) {
    std::vector<int> half;
    int left = g;
    while (left > 0) {
        std::uniform_int_distribution<int> pick(1, left);
        const int s = pick(rng);
        half.push_back(s);
        left -= s;
    }
    std::vector<int> steps = half;
    steps.insert(steps.end(), half.rbegin(), half.rend());
    return steps;
}

// Alexander polynomial of T(a,b) from the semigroup generated by a and b:
// Δ(t) = (1 - t) Σ_{s in S} t^s, then centred.
inline std::map<int, std::int64_t> semigroup_alexander(int a, int b) {
    const int two_g = (a - 1) * (b - 1);
    std::vector<bool> in(two_g + 2, false);
    for (int x = 0; x * a <= two_g + 1; ++x) {
        for (int y = 0; x * a + y * b <= two_g + 1; ++y) in[x * a + y * b] = true;
    }
    std::map<int, std::int64_t> out;
    for (int s = 0; s <= two_g; ++s) {
        const int c = (in[s] ? 1 : 0) - (s > 0 && in[s - 1] ? 1 : 0);
        if (c != 0) out[s - two_g / 2] = c;
    }
    return out;
}

}  // namespace oracle
