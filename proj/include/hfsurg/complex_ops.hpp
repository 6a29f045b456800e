#pragma once

// Subquotient complexes of a bifiltered model of CFK^infinity.
//
// A region of Z⊕Z is described by a level function L(i, j). The "hat" subquotient
// {L = 0} contains, for every basis generator x, exactly the translate U^{L(x)} x; its
// differential keeps a target y of d x iff L(y) = L(x). The "plus" subquotient {L >= 0}
// contains U^n x for all n <= L(x) and splits as a direct sum over n, because every
// arrow of the model is between basis elements.

#include <functional>

#include "hfsurg/algebra.hpp"
#include "hfsurg/knotio.hpp"

namespace hfsurg {

using LevelFn = std::function<int(int i, int j)>;

struct HatSubquotient {
    // Element k is U^{shift[k]} x_{generator[k]}.
    std::vector<std::size_t> generator;
    std::vector<int> shift;
    ChainComplexF2 complex;

    std::size_t size() const { return generator.size(); }
};

HatSubquotient hat_subquotient(const BifilteredComplex& cx, const LevelFn& level);

// Â_s = C{max(i, j - s) = 0}
HatSubquotient a_hat(const BifilteredComplex& cx, int s);
// B̂ = C{i = 0}
HatSubquotient b_hat(const BifilteredComplex& cx);

// Homology of {L >= 0} in the window of layers that contains its lowest grading: the layers
// n with min L - 1 <= n <= max L. The layer n = min L - 1 is the whole complex shifted.
GradedVectorSpace plus_homology_window(const BifilteredComplex& cx, const LevelFn& level);

// Lowest grading carrying homology in {L >= 0}.
Grading plus_bottom(const BifilteredComplex& cx, const LevelFn& level);

// dim of ĤFK in each Alexander grading.
std::map<int, std::size_t> hfk_hat(const BifilteredComplex& cx);

// max{A : ĤFK_A != 0}, clamped below at 0.
int complex_genus(const BifilteredComplex& cx);

// Rank of the map induced on homology by the chain map f: source -> target
// (column k of f is the image of source generator k).
std::size_t induced_rank(const ChainComplexF2& source, const ChainComplexF2& target, const F2Matrix& f);

// Projection v̂_s : Â_s -> B̂ (keep the part with i = 0).
F2Matrix v_hat_map(const HatSubquotient& a, const HatSubquotient& b, const BifilteredComplex& cx);

}  // namespace hfsurg
