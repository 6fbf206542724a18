#pragma once

#include "semireflex/classify.hpp"

#include <json.hpp>

#include <string>

namespace semireflex {

using Json = nlohmann::ordered_json;

// One dump convention for every emitted document: 2-space indent, trailing
// newline. Byte-determinism of the CLI rests on this.
std::string to_json_text(const Json& j);

// {"dim": int, "inequalities": [{"a": ["p/q", ...], "b": "p/q"}, ...]} with
// an optional "vertices" array of coordinate lists. Rationals are reduced
// strings throughout.
Json polytope_to_json(const HRep& p);
Json polytope_to_json(const HRep& p, const VRep& vertices);

// Validates through make_hrep: the result is bounded (or flagged empty).
// Malformed documents raise parse_error. A "vertices" key is ignored.
HRep polytope_from_json(const Json& j);

Json vertices_to_json(const VRep& v);

// CSV rows "lo,lo_closed,hi,hi_closed,value", one per piece.
std::string step_to_csv(const StepFunction& f);

// {"s_max", "pieces", "drop_points"}.
Json step_to_json(const StepFunction& f);

// Deterministic staircase plot: exact integer pixel coordinates, labeled
// breakpoints, no timestamps.
std::string step_to_svg(const StepFunction& f);

Json classification_to_json(const Classification& c);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace semireflex
