#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "tauroot/quiver.hpp"

namespace tauroot {

using Json = nlohmann::ordered_json;

/// {"vertices":[{"id":..}], "arrows":[{"src":..,"dst":..,"color":int|null,"mult":int}]}.
/// Vertex "level"/"group" keys are written only when set.
Json quiver_to_json(const ColoredQuiver& q);

/// Reads the quiver schema and validates the result. SchemaError messages
/// name the offending field as a path rooted at `where`.
ColoredQuiver quiver_from_json(const Json& j, const std::string& where = "$");

/// Compact JSON text.
std::string serialize(const ColoredQuiver& q);

/// Throws ParseError (with byte position), SchemaError, or a validation error.
ColoredQuiver deserialize(std::string_view text);

/// Parses JSON text, mapping syntax errors to Errc::ParseError.
Json parse_json(std::string_view text);

struct DotOptions {
  /// Emit an edge `mult` times instead of one edge labelled "×m".
  bool repeat_multi_edges = false;
  std::string graph_name = "Q";
};

std::string to_dot(const ColoredQuiver& q, const DotOptions& opts = {});

/// Reads a digraph in the dialect to_dot writes: node and edge statements,
/// edge chains, label "×m" (or "xm") for multiplicity, color "c<k>" for
/// arrow colors. Repeated edges accumulate multiplicity.
ColoredQuiver from_dot(std::string_view text);

// Schema helpers shared by the module-specific readers.
namespace schema {
const Json& field(const Json& obj, const char* key, const std::string& where);
std::string string_at(const Json& j, const std::string& where);
int int_at(const Json& j, const std::string& where);
const Json& array_at(const Json& j, const std::string& where);
const Json& object_at(const Json& j, const std::string& where);
}  // namespace schema

}  // namespace tauroot
