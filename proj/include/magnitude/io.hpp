#pragma once

#include <filesystem>
#include <string>
#include <utility>

#include <json.hpp>

#include "magnitude/distmod.hpp"
#include "magnitude/quiver.hpp"
#include "magnitude/ring.hpp"
#include "magnitude/space.hpp"

namespace magnitude {

using Json = nlohmann::ordered_json;

enum class InputKind { Digraph, Space, Module };

std::string to_string(InputKind kind);
/// "digraph", "space" or "module".
InputKind parse_input_kind(const std::string& text);
/// Guesses the kind from the top-level keys. Throws ParseError.
InputKind detect_kind(const Json& j);

/// Throws ParseError on unreadable files or malformed JSON.
Json read_json_file(const std::filesystem::path& path);

/// {"vertices": [...], "arcs": [[u, v], ...]}
Digraph parse_digraph(const Json& j);
Json digraph_to_json(const Digraph& graph);

/// {"points": [...], "dist": [[entry, ...], ...]}; entries are integers, "p/q" or "inf".
QuasimetricSpace parse_space(const Json& j);
Json space_to_json(const QuasimetricSpace& space);

/// A space given as a space object, a digraph object, or a path to either
/// (relative paths resolve against `base`).
QuasimetricSpace parse_space_reference(const Json& j, const std::filesystem::path& base);

/// {"space": ..., "components": {point: [[grade, rank], ...]}, "actions": {"x->y": {grade: matrix}}}.
/// Returns the unvalidated data together with its space.
std::pair<QuasimetricSpace, ModuleData> parse_module_data(const Json& j, const std::filesystem::path& base);
/// As above, then validated.
DistanceModule parse_module(const Json& j, const std::filesystem::path& base);
/// Writes every action explicitly, with the space embedded.
Json module_to_json(const DistanceModule& module);

/// {"R1": [[path, path], ...], "R2": [path, ...]} with label paths.
Json relations_to_json(const Digraph& graph, const QuiverRelations& relations);

/// {"classes": {"n,ℓ": k}, "products": [{"lhs": [n, ℓ, i], "rhs": [m, s, j], "result": [[coeff, index], ...]}]}.
/// Grades and coefficients are exact rational strings.
Json ring_table_to_json(const RingTable& table);

}  // namespace magnitude
