#pragma once

// Exact linear algebra over F_2 and homology of cones of U-monomial maps
// between towers T+ = F[U,U^-1]/U F[U].

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hfsurg {

using Grading = std::int64_t;

class AlgebraError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Sparse F_2 matrix stored as the set of positions holding a 1.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return entries_.count({r, c}) != 0; }
    void set(std::size_t r, std::size_t c, bool value = true);
    // Adds 1 at (r, c) modulo 2.
    void toggle(std::size_t r, std::size_t c);

    const std::set<std::pair<std::size_t, std::size_t>>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    F2Matrix transpose() const;
    // Column j of the result is the image of column j of rhs.
    F2Matrix operator*(const F2Matrix& rhs) const;
    bool operator==(const F2Matrix&) const = default;

    static F2Matrix identity(std::size_t n);
    static F2Matrix from_rows(const std::vector<std::vector<int>>& rows);

private:
    void check_bounds(std::size_t r, std::size_t c) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::set<std::pair<std::size_t, std::size_t>> entries_;
};

std::size_t f2_rank(const F2Matrix& m);

// Basis of {x : m x = 0}, each vector given as the set of its non-zero coordinates.
std::vector<std::vector<std::size_t>> f2_nullspace(const F2Matrix& m);

// Graded dimension function n -> dim V_n with finite support.
class GradedVectorSpace {
public:
    GradedVectorSpace() = default;

    void add(Grading n, std::size_t count = 1);
    std::size_t dim(Grading n) const;
    std::size_t total() const;
    bool empty() const { return dims_.empty(); }

    Grading min_grading() const;
    Grading max_grading() const;
    GradedVectorSpace shifted(Grading by) const;

    const std::map<Grading, std::size_t>& dims() const { return dims_; }
    bool operator==(const GradedVectorSpace&) const = default;

private:
    std::map<Grading, std::size_t> dims_;  // zero entries never stored
};

// A graded complex over F_2: generator k sits in gradings[k]; column k of d is its boundary.
struct ChainComplexF2 {
    std::vector<Grading> gradings;
    F2Matrix d;
};

// Homology of a graded complex. Throws AlgebraError if d is not square of the right size,
// not homogeneous of degree -1, or d∘d != 0.
GradedVectorSpace chain_homology_f2(const ChainComplexF2& complex);

// dim ker(outgoing) - rank(incoming) at the level between two consecutive differentials.
std::size_t chain_homology_f2(const F2Matrix& incoming, const F2Matrix& outgoing);

// Total homology dimension of an ungraded complex with square differential d.
std::size_t total_homology_dim(const F2Matrix& d);

struct TorsionSummand {
    std::int64_t length = 1;  // F[U]/U^length
    Grading top = 0;          // grading of the highest non-zero element

    Grading bottom() const { return top - 2 * (length - 1); }
    auto operator<=>(const TorsionSummand&) const = default;
};

// One optional tower T+ (bottom at tower_bottom) plus cyclic torsion summands.
struct GradedModule {
    std::optional<Grading> tower_bottom;
    std::vector<TorsionSummand> torsion;

    // Summands sorted by (top, length).
    GradedModule canonical() const;
    // Shifted so that the tower bottom sits at grading 0 (no-op without a tower).
    GradedModule normalized() const;
    GradedModule shifted(Grading by) const;

    std::size_t dim(Grading n) const;
    GradedVectorSpace coker_u() const;
    GradedVectorSpace ker_u() const;
    // The torsion part only (HF_red).
    GradedVectorSpace reduced() const;

    bool operator==(const GradedModule& other) const;
};

// "T+[b] + F[U]/U^k[top] + ..." in canonical order.
std::string to_string(const GradedModule& m);

// Isomorphic up to an overall grading shift.
bool relatively_isomorphic(const GradedModule& a, const GradedModule& b);

enum class NodeKind { A, B };

struct TowerNode {
    NodeKind kind = NodeKind::A;
    int label = 0;        // index t of A_t / B_t, informational
    Grading offset = 0;   // grading of the bottom element of the tower
};

struct TowerEntry {
    std::size_t from = 0;    // an A node
    std::size_t to = 0;      // a B node
    std::int64_t exponent = 0;
};

// A map from the direct sum of the A-node towers to that of the B-node towers whose
// entries are powers of U.
struct MonomialTowerMap {
    std::vector<TowerNode> nodes;
    std::vector<TowerEntry> entries;

    // Throws AlgebraError on malformed entries, degree > 2, non-homogeneous entries or cycles.
    void validate() const;
};

// Homology of the mapping cone as (one tower or none) plus torsion, by graded pivoting on
// the U-exponent pattern. Exact; no truncation.
GradedModule tower_cone_homology(const MonomialTowerMap& map);

}  // namespace hfsurg
