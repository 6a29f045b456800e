#pragma once

// JSON (schema 1) and plain-text rendering of tables and reports. Classes are listed by
// residue and torsion summands by (top grading, length), so equal inputs give equal bytes.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hfsurg/obstruct.hpp"

namespace hfsurg {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json document(const std::string& command);

Json hat_classes_json(const HatTable& table);
Json plus_classes_json(const PlusTable& table, const std::optional<StaircaseKnot>& knot);
Json report_json(const ObstructionReport& report);

std::string hat_text(const HatTable& table);
std::string plus_text(const PlusTable& table, const std::optional<StaircaseKnot>& knot);
std::string report_text(const ObstructionReport& report);

// d(S^3_p(K), [r]) for the representative s of r with |s| <= (p - 1)/2, when the large-surgery
// formula applies (p >= 2g - 1); nullopt otherwise.
std::optional<Rational> class_d_invariant(const StaircaseKnot& knot, int p, int residue);

std::string rational_string(const Rational& q);

}  // namespace hfsurg
