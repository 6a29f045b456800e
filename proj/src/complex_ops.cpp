#include "hfsurg/complex_ops.hpp"

#include <algorithm>
#include <limits>

namespace hfsurg {

HatSubquotient hat_subquotient(const BifilteredComplex& cx, const LevelFn& level) {
    HatSubquotient out;
    const std::size_t n = cx.size();
    std::vector<int> lv(n);
    for (std::size_t x = 0; x < n; ++x) {
        const auto& g = cx.generator(x);
        lv[x] = level(g.i, g.j);
        out.generator.push_back(x);
        out.shift.push_back(lv[x]);
        out.complex.gradings.push_back(g.gr - 2 * lv[x]);
    }
    out.complex.d = F2Matrix(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y : cx.boundary(x)) {
            if (lv[y] == lv[x]) out.complex.d.toggle(y, x);
        }
    }
    return out;
}

HatSubquotient a_hat(const BifilteredComplex& cx, int s) {
    return hat_subquotient(cx, [s](int i, int j) { return std::max(i, j - s); });
}

HatSubquotient b_hat(const BifilteredComplex& cx) {
    return hat_subquotient(cx, [](int i, int) { return i; });
}

GradedVectorSpace plus_homology_window(const BifilteredComplex& cx, const LevelFn& level) {
    const std::size_t n = cx.size();
    std::vector<int> lv(n);
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (std::size_t x = 0; x < n; ++x) {
        lv[x] = level(cx.generator(x).i, cx.generator(x).j);
        lo = std::min(lo, lv[x]);
        hi = std::max(hi, lv[x]);
    }

    GradedVectorSpace total;
    for (int layer = lo - 1; layer <= hi; ++layer) {
        std::vector<std::size_t> local(n, n);
        ChainComplexF2 part;
        std::vector<std::size_t> members;
        for (std::size_t x = 0; x < n; ++x) {
            if (layer <= lv[x]) {
                local[x] = members.size();
                members.push_back(x);
                part.gradings.push_back(cx.generator(x).gr - 2 * layer);
            }
        }
        part.d = F2Matrix(members.size(), members.size());
        for (std::size_t x : members) {
            for (std::size_t y : cx.boundary(x)) {
                if (local[y] != n) part.d.toggle(local[y], local[x]);
            }
        }
        const auto h = chain_homology_f2(part);
        for (const auto& [g, d] : h.dims()) total.add(g, d);
    }
    return total;
}

Grading plus_bottom(const BifilteredComplex& cx, const LevelFn& level) {
    return plus_homology_window(cx, level).min_grading();
}

std::map<int, std::size_t> hfk_hat(const BifilteredComplex& cx) {
    // Associated graded of C{i = 0}: keep only arrows preserving both filtrations.
    std::map<int, std::vector<std::size_t>> by_alexander;
    for (std::size_t x = 0; x < cx.size(); ++x) by_alexander[cx.generator(x).alexander()].push_back(x);

    std::map<int, std::size_t> out;
    for (const auto& [a, members] : by_alexander) {
        std::vector<std::size_t> local(cx.size(), cx.size());
        ChainComplexF2 part;
        for (std::size_t k = 0; k < members.size(); ++k) {
            local[members[k]] = k;
            const auto& g = cx.generator(members[k]);
            part.gradings.push_back(g.gr - 2 * g.i);
        }
        part.d = F2Matrix(members.size(), members.size());
        for (std::size_t x : members) {
            for (std::size_t y : cx.boundary(x)) {
                const auto& gx = cx.generator(x);
                const auto& gy = cx.generator(y);
                if (gy.i == gx.i && gy.j == gx.j) part.d.toggle(local[y], local[x]);
            }
        }
        const std::size_t dim = chain_homology_f2(part).total();
        if (dim > 0) out[a] = dim;
    }
    return out;
}

int complex_genus(const BifilteredComplex& cx) {
    const auto hfk = hfk_hat(cx);
    if (hfk.empty()) return 0;
    return std::max(0, hfk.rbegin()->first);
}

std::size_t induced_rank(const ChainComplexF2& source, const ChainComplexF2& target, const F2Matrix& f) {
    // rank f_* = dim(f(Z) + B) - dim(B), with Z the cycles of the source and B the boundaries
    // of the target.
    const auto cycles = f2_nullspace(source.d);
    F2Matrix images(target.gradings.size(), cycles.size());
    for (std::size_t k = 0; k < cycles.size(); ++k) {
        for (std::size_t x : cycles[k]) {
            for (const auto& [r, c] : f.entries()) {
                if (c == x) images.toggle(r, k);
            }
        }
    }
    F2Matrix joined(target.gradings.size(), target.gradings.size() + cycles.size());
    for (const auto& [r, c] : target.d.entries()) joined.set(r, c);
    for (const auto& [r, c] : images.entries()) joined.set(r, target.gradings.size() + c);
    return f2_rank(joined) - f2_rank(target.d);
}

F2Matrix v_hat_map(const HatSubquotient& a, const HatSubquotient& b, const BifilteredComplex& cx) {
    F2Matrix f(b.size(), a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        const std::size_t x = a.generator[k];
        // U^n x lies in C{i = 0} exactly when n = i(x), which is B̂'s translate of x.
        if (a.shift[k] == cx.generator(x).i) f.set(x, k);
    }
    return f;
}

}  // namespace hfsurg
