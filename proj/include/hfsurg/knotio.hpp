#pragma once

// Knot input: Alexander polynomials, torus knot parameters and explicit
// bifiltered model complexes for CFK^infinity.

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hfsurg {

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Syntax error in an Alexander polynomial; position is a 0-based character offset.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Integer Laurent polynomial with a_k = a_{-k} and value 1 at t = 1.
class SymmetricLaurent {
public:
    SymmetricLaurent() = default;
    // Validates symmetry and the normalization at t = 1; zero coefficients are dropped.
    explicit SymmetricLaurent(std::map<int, std::int64_t> coefficients);

    std::int64_t coefficient(int exponent) const;
    int genus() const;  // top exponent
    const std::map<int, std::int64_t>& coefficients() const { return coeffs_; }
    std::string to_string() const;

    bool operator==(const SymmetricLaurent&) const = default;

private:
    std::map<int, std::int64_t> coeffs_{{0, 1}};
};

SymmetricLaurent parse_alexander(const std::string& text);

// Symmetrized (t^{ab}-1)(t-1)/((t^a-1)(t^b-1)) for coprime 2 <= a < b (either order accepted).
SymmetricLaurent torus_knot_alexander(int a, int b);

struct Generator {
    std::string name;
    int i = 0;
    int j = 0;
    int gr = 0;

    int alexander() const { return j - i; }
    bool operator==(const Generator&) const = default;
};

// A finite F[U,U^-1]-basis of CFK^infinity. Differentials and the flip are stored by
// generator index; all arrows are between basis elements (no U-powers).
class BifilteredComplex {
public:
    BifilteredComplex() = default;
    // Validates all invariants; throws InputError.
    BifilteredComplex(std::vector<Generator> generators, std::vector<std::vector<std::size_t>> differential,
                      std::vector<std::size_t> flip);

    std::size_t size() const { return gens_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& generator(std::size_t k) const { return gens_[k]; }
    const std::vector<std::size_t>& boundary(std::size_t k) const { return diff_[k]; }
    std::size_t flip(std::size_t k) const { return flip_[k]; }
    std::size_t index_of(const std::string& name) const;

    bool operator==(const BifilteredComplex&) const = default;

private:
    void validate() const;

    std::vector<Generator> gens_;
    std::vector<std::vector<std::size_t>> diff_;  // sorted target indices
    std::vector<std::size_t> flip_;
};

// JSON document: {"generators":[{name,i,j,gr}], "differential":{name:[names]}, "flip":{name:name}}.
BifilteredComplex parse_cfk(const std::string& document);
BifilteredComplex load_cfk_file(const std::string& path);
std::string serialize_cfk(const BifilteredComplex& complex);

struct TorusKnot {
    int a = 2;
    int b = 3;
};

struct AlexanderKnot {
    SymmetricLaurent alexander;
};

struct ComplexKnot {
    BifilteredComplex complex;
    std::string source;
};

struct KnotSpec {
    std::variant<TorusKnot, AlexanderKnot, ComplexKnot> value;
    std::string label;
};

// "torus:a,b" | "alex:<polynomial>" | "cfk:<path>"
KnotSpec parse_knot_spec(const std::string& text);
KnotSpec torus_spec(int a, int b);

}  // namespace hfsurg
