#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "magnitude/field.hpp"

namespace magnitude {

using PointId = std::size_t;
using Grade = Rational;

/// Exact distance in [0, ∞]: a nonnegative rational or infinity.
class ExtDist {
 public:
  ExtDist() = default;
  ExtDist(const Rational& value);  // NOLINT(google-explicit-constructor)
  ExtDist(long value) : ExtDist(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  static ExtDist infinity();
  /// "inf", an integer, or "p/q".
  static ExtDist parse(std::string_view text);

  bool is_finite() const noexcept { return finite_; }
  bool is_infinite() const noexcept { return !finite_; }
  /// Throws InvalidArgument on ∞.
  const Rational& value() const;
  std::string to_string() const;

  friend ExtDist operator+(const ExtDist& a, const ExtDist& b);
  friend bool operator==(const ExtDist& a, const ExtDist& b);
  friend std::strong_ordering operator<=>(const ExtDist& a, const ExtDist& b);

 private:
  bool finite_ = true;
  Rational value_ = 0;
};

/// Finite quasimetric space with exact extended-rational distances.
/// Always valid: instances come from `validate_space` or derived constructions.
class QuasimetricSpace {
 public:
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(PointId p) const { return labels_.at(p); }
  /// Throws UnknownPoint.
  PointId index_of(std::string_view label) const;
  const ExtDist& dist(PointId x, PointId y) const { return dist_[x * size() + y]; }

  friend bool operator==(const QuasimetricSpace&, const QuasimetricSpace&) = default;

 private:
  friend QuasimetricSpace validate_space(std::vector<std::string>, std::vector<std::vector<ExtDist>>);
  std::vector<std::string> labels_;
  std::vector<ExtDist> dist_;
};

/// Checks the quasimetric axioms; throws NonzeroDiagonal, ZeroOffDiagonal or
/// TriangleViolation(x, y, z) for the first violation in index order.
QuasimetricSpace validate_space(std::vector<std::string> points, std::vector<std::vector<ExtDist>> matrix);

/// Loop-free digraph with set semantics on arcs.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& arcs);
  Digraph(std::size_t vertex_count, const std::vector<std::pair<PointId, PointId>>& arcs);

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::set<std::pair<PointId, PointId>>& arcs() const noexcept { return arcs_; }
  bool has_arc(PointId u, PointId v) const { return arcs_.count({u, v}) != 0; }
  std::vector<PointId> successors(PointId u) const;
  PointId index_of(std::string_view label) const;

 private:
  std::vector<std::string> vertices_;
  std::set<std::pair<PointId, PointId>> arcs_;
};

/// Shortest-path (breadth-first) distances; ∞ where unreachable.
QuasimetricSpace digraph_to_space(const Digraph& graph);

/// d(x,y) + d(y,z) = d(x,z) with all three finite.
bool between(const QuasimetricSpace& space, PointId x, PointId y, PointId z);
bool between(const QuasimetricSpace& space, std::string_view x, std::string_view y, std::string_view z);

QuasimetricSpace opposite_space(const QuasimetricSpace& space);

/// Minimum finite d(x,y) over x ≠ y; throws NoFiniteDistance.
Rational min_positive_distance(const QuasimetricSpace& space);

/// Grades ≤ max_grade attained by some tuple with finite consecutive distances,
/// in increasing order. Always contains 0 for a nonempty space.
std::vector<Grade> attainable_grades(const QuasimetricSpace& space, const Grade& max_grade);

}  // namespace magnitude
