#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "magnitude/distmod.hpp"
#include "magnitude/space.hpp"

namespace magnitude {

/// A directed path as its vertex sequence; length = number of arcs.
using Path = std::vector<PointId>;

struct QuiverRelations {
  /// Unordered pairs of distinct shortest paths with equal endpoints, first < second.
  std::vector<std::pair<Path, Path>> r1;
  /// Minimal non-shortest paths.
  std::vector<Path> r2;
};

/// All paths of the given length in the digraph, lexicographic.
std::vector<Path> paths_of_length(const Digraph& graph, std::size_t length);
/// Shortest paths of positive length, lexicographic.
std::vector<Path> shortest_paths(const Digraph& graph);
QuiverRelations quiver_relations(const Digraph& graph);

struct PresentationRow {
  std::size_t length = 0;
  std::size_t paths = 0;
  std::size_t relation_rank = 0;
  /// dim (KG/R(G))_length = paths - relation_rank.
  std::size_t quotient_dim = 0;
  /// #{(x,y) : d(x,y) = length}.
  std::size_t pairs_at_distance = 0;
};

struct PresentationReport {
  std::vector<PresentationRow> rows;
  /// One more than the longest shortest path.
  std::size_t admissibility_exponent = 0;
  /// Every relation has length ≥ 2.
  bool relations_in_square = false;
  /// Every path of the admissibility exponent's length lies in R(G).
  bool power_in_relations = false;

  bool dimensions_match() const;
  bool ok() const { return dimensions_match() && relations_in_square && power_in_relations; }
};

/// Graded dimensions of KG/R(G) for lengths 0..l_max against the distance
/// counts, plus the admissibility window. Never throws on mismatch.
PresentationReport bound_quiver_dimensions(const Digraph& graph, std::size_t l_max);
/// As above; throws DimensionMismatch on the first failing length or admissibility check.
PresentationReport check_bound_quiver_presentation(const Digraph& graph, std::size_t l_max);

/// A graded representation of the digraph: a free graded module per vertex and a
/// degree-one map per arc. A missing arc map is zero.
struct QuiverRepresentation {
  std::vector<std::map<Grade, std::size_t>> components;
  std::map<std::pair<PointId, PointId>, std::map<Grade, IntMatrix>> arcs;
};

/// The arc maps M(u,v) of a distance module over the digraph's space.
QuiverRepresentation restrict_to_arcs(const DistanceModule& module, const Digraph& graph);

struct RelationFailure {
  /// One path for an R2 failure, both paths for an R1 failure.
  std::vector<Path> relation;
  Grade grade;
};

/// Composite of the arc maps along `path`, starting at `grade` of its first vertex.
IntMatrix path_map(const QuiverRepresentation& rep, const Path& path, const Grade& grade);
std::vector<RelationFailure> representation_violations(const Digraph& graph, const QuiverRepresentation& rep);
/// Throws RelationViolation for the first failure.
void check_representation_relations(const Digraph& graph, const QuiverRepresentation& rep);

}  // namespace magnitude
