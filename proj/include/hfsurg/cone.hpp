#pragma once

// Truncated mapping cones for integer surgery and the Floer groups computed from them.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hfsurg/algebra.hpp"
#include "hfsurg/knotio.hpp"
#include "hfsurg/staircase.hpp"

namespace hfsurg {

enum class Flavor { Hat, Plus };
enum class Engine { Closed, Direct, Both };

// Raised when two engines that should agree do not.
class EngineMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Residue of s in [0, |p|).
int spinc_residue(int s, int p);

struct ConeNode {
    NodeKind kind = NodeKind::A;
    int index = 0;
    Grading offset = 0;  // bottom of the tower (plus flavor on staircases only)
};

struct ConeEdge {
    std::size_t from = 0;  // A node
    std::size_t to = 0;    // B node
    bool vertical = true;  // v_t (A_t -> B_t) or h_t (A_t -> B_{t+p})
    std::int64_t exponent = 0;
};

// One Spin^c class of the truncated cone. Nodes are listed in path order.
struct ConeDiagram {
    int p = 1;
    int residue = 0;
    int genus = 1;
    std::vector<ConeNode> nodes;
    std::vector<ConeEdge> edges;

    std::vector<int> a_indices() const;
    std::vector<int> b_indices() const;
    MonomialTowerMap tower_map() const;
};

// Shape of the diagram for a knot of the given genus; exponents and offsets are zero.
// Genus 0 is truncated as if it were genus 1.
ConeDiagram cone_shape(int genus, int p, int s);

// Staircase cone: A_t carries exponents V_t on v_t and H_t on h_t, offsets propagated
// from the smallest B node (or the lone A node) at grading 0.
ConeDiagram build_truncated_cone(const StaircaseKnot& knot, int p, int s);

// Shape only for a general complex; the plus flavor is rejected.
ConeDiagram build_truncated_cone(const BifilteredComplex& complex, int p, int s, Flavor flavor);

// The assembled hat cone over F_2 (ungraded) for a general complex.
F2Matrix assemble_hat_cone(const BifilteredComplex& complex, const ConeDiagram& diagram);

struct HatTable {
    int p = 1;
    std::vector<std::size_t> dims;  // by residue

    bool operator==(const HatTable&) const = default;
};

struct PlusTable {
    int p = 1;
    std::vector<GradedModule> modules;  // by residue, normalized and canonical

    bool operator==(const PlusTable&) const = default;
};

struct CheckTable {
    int p = 1;
    std::vector<GradedVectorSpace> coker;  // by residue, relative to the tower bottom

    std::optional<Grading> bottom(int residue) const;
    std::optional<Grading> top(int residue) const;
    bool operator==(const CheckTable&) const = default;
};

HatTable hat_dims(const StaircaseKnot& knot, int p);
HatTable hat_dims(const BifilteredComplex& complex, int p);
// Requires 1 < |p| <= 2g - 1.
HatTable closed_form_hat_dims(const StaircaseKnot& knot, int p);

// True when the closed-form plus description applies: p | 2g - 1 (either sign) or p = 1 - 2g.
bool closed_form_plus_applies(const StaircaseKnot& knot, int p);
PlusTable hf_plus_direct(const StaircaseKnot& knot, int p);
PlusTable hf_plus_closed(const StaircaseKnot& knot, int p);
// Both: runs the two engines where the closed form applies and throws EngineMismatch on a
// difference; elsewhere it falls back to the direct engine.
PlusTable hf_plus(const StaircaseKnot& knot, int p, Engine engine = Engine::Direct);

struct ZGrading {
    Grading x = 0;
    Grading y = 0;
    Grading z = 0;
};

// For every residue, the gradings of x_t, y_t, z_t for the A nodes with |t| <= g - 1,
// anchored at z = 0 for the smallest such t.
struct ZElements {
    int p = 1;
    std::vector<std::map<int, ZGrading>> classes;
};

ZElements z_gradings(const StaircaseKnot& knot, int p);

// Difference gr(z_{t+p}) - gr(z_t) for a staircase knot.
Grading z_step(int t, int p);

// Counting description of coker U; requires p | 2g - 1 and p not in {2g - 1, 1 - 2g}.
CheckTable check_hf_counting(const StaircaseKnot& knot, int p);
// coker U of the direct plus table; works for every slope.
CheckTable check_hf_direct(const StaircaseKnot& knot, int p);

using Rational = boost::rational<std::int64_t>;

// A knot resolved for computation: torus and Alexander inputs become staircases, CFK files
// stay general complexes.
struct KnotModel {
    std::string label;
    std::optional<StaircaseKnot> staircase;
    std::optional<BifilteredComplex> complex;

    int genus() const;
    bool is_staircase() const { return staircase.has_value(); }
};

KnotModel resolve_knot(const KnotSpec& spec);
HatTable hat_dims(const KnotModel& knot, int p);

// d(S^3_N(K), [s]) for N >= 2g - 1 and |s| <= (N - 1) / 2.
Rational d_invariant_large(const StaircaseKnot& knot, int N, int s);

}  // namespace hfsurg
