#include "magnitude/space.hpp"

#include <algorithm>
#include <deque>

#include "magnitude/error.hpp"

namespace magnitude {

ExtDist::ExtDist(const Rational& value) : finite_(true), value_(value) {
  if (value_ < 0) throw Error(ErrorCode::ParseError, "negative distance " + value_.get_str());
}

ExtDist ExtDist::infinity() {
  ExtDist d;
  d.finite_ = false;
  return d;
}

ExtDist ExtDist::parse(std::string_view text) {
  if (text == "inf" || text == "Inf" || text == "INF" || text == "∞") return infinity();
  return ExtDist(parse_rational(text));
}

const Rational& ExtDist::value() const {
  if (!finite_) throw Error(ErrorCode::InvalidArgument, "infinite distance has no rational value");
  return value_;
}

std::string ExtDist::to_string() const { return finite_ ? value_.get_str() : "inf"; }

ExtDist operator+(const ExtDist& a, const ExtDist& b) {
  if (!a.finite_ || !b.finite_) return ExtDist::infinity();
  return ExtDist(a.value_ + b.value_);
}

bool operator==(const ExtDist& a, const ExtDist& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtDist& a, const ExtDist& b) {
  if (!a.finite_ || !b.finite_) {
    if (a.finite_ == b.finite_) return std::strong_ordering::equal;
    return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

PointId QuasimetricSpace::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw Error(ErrorCode::UnknownPoint, "unknown point '" + std::string(label) + "'", {std::string(label)});
  }
  return static_cast<PointId>(it - labels_.begin());
}

QuasimetricSpace validate_space(std::vector<std::string> points, std::vector<std::vector<ExtDist>> matrix) {
  const std::size_t n = points.size();
  if (matrix.size() != n) throw Error(ErrorCode::ShapeMismatch, "distance matrix is not square over the point list");
  for (const auto& row : matrix) {
    if (row.size() != n) throw Error(ErrorCode::ShapeMismatch, "distance matrix is not square over the point list");
  }
  std::vector<std::string> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw Error(ErrorCode::InvalidArgument, "duplicate point label '" + *dup + "'", {*dup});
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (matrix[x][x] != ExtDist(0)) {
      throw Error(ErrorCode::NonzeroDiagonal, "d(" + points[x] + "," + points[x] + ") must be 0", {points[x]});
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && matrix[x][y] == ExtDist(0)) {
        throw Error(ErrorCode::ZeroOffDiagonal, "d(" + points[x] + "," + points[y] + ") = 0 for distinct points",
                    {points[x], points[y]});
      }
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (matrix[x][y] + matrix[y][z] < matrix[x][z]) {
          throw Error(ErrorCode::TriangleViolation,
                      "triangle inequality fails: d(" + points[x] + "," + points[y] + ") + d(" + points[y] + "," +
                          points[z] + ") < d(" + points[x] + "," + points[z] + ")",
                      {points[x], points[y], points[z]});
        }
      }
  QuasimetricSpace space;
  space.labels_ = std::move(points);
  space.dist_.reserve(n * n);
  for (auto& row : matrix)
    for (auto& d : row) space.dist_.push_back(std::move(d));
  return space;
}

Digraph::Digraph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& arcs)
    : vertices_(std::move(vertices)) {
  std::vector<std::string> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw Error(ErrorCode::InvalidArgument, "duplicate vertex label '" + *dup + "'", {*dup});
  }
  for (const auto& [u, v] : arcs) {
    PointId a = index_of(u);
    PointId b = index_of(v);
    if (a == b) throw Error(ErrorCode::InvalidArgument, "loop at vertex '" + u + "'", {u});
    arcs_.emplace(a, b);
  }
}

Digraph::Digraph(std::size_t vertex_count, const std::vector<std::pair<PointId, PointId>>& arcs) {
  for (std::size_t i = 0; i < vertex_count; ++i) vertices_.push_back("v" + std::to_string(i));
  for (const auto& [a, b] : arcs) {
    if (a >= vertex_count || b >= vertex_count) throw Error(ErrorCode::InvalidArgument, "arc endpoint out of range");
    if (a == b) throw Error(ErrorCode::InvalidArgument, "loop at vertex " + vertices_[a], {vertices_[a]});
    arcs_.emplace(a, b);
  }
}

std::vector<PointId> Digraph::successors(PointId u) const {
  std::vector<PointId> out;
  for (auto it = arcs_.lower_bound({u, 0}); it != arcs_.end() && it->first == u; ++it) out.push_back(it->second);
  return out;
}

PointId Digraph::index_of(std::string_view label) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end()) {
    throw Error(ErrorCode::UnknownPoint, "unknown vertex '" + std::string(label) + "'", {std::string(label)});
  }
  return static_cast<PointId>(it - vertices_.begin());
}

QuasimetricSpace digraph_to_space(const Digraph& graph) {
  const std::size_t n = graph.size();
  std::vector<std::vector<ExtDist>> matrix(n, std::vector<ExtDist>(n, ExtDist::infinity()));
  for (PointId s = 0; s < n; ++s) {
    std::vector<long> level(n, -1);
    std::deque<PointId> queue{s};
    level[s] = 0;
    while (!queue.empty()) {
      PointId u = queue.front();
      queue.pop_front();
      for (PointId v : graph.successors(u)) {
        if (level[v] >= 0) continue;
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
    for (PointId t = 0; t < n; ++t) {
      if (level[t] >= 0) matrix[s][t] = ExtDist(level[t]);
    }
  }
  return validate_space(graph.vertices(), std::move(matrix));
}

bool between(const QuasimetricSpace& space, PointId x, PointId y, PointId z) {
  const ExtDist& xy = space.dist(x, y);
  const ExtDist& yz = space.dist(y, z);
  const ExtDist& xz = space.dist(x, z);
  if (xy.is_infinite() || yz.is_infinite() || xz.is_infinite()) return false;
  return xy.value() + yz.value() == xz.value();
}

bool between(const QuasimetricSpace& space, std::string_view x, std::string_view y, std::string_view z) {
  return between(space, space.index_of(x), space.index_of(y), space.index_of(z));
}

QuasimetricSpace opposite_space(const QuasimetricSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::vector<ExtDist>> matrix(n, std::vector<ExtDist>(n));
  for (PointId x = 0; x < n; ++x)
    for (PointId y = 0; y < n; ++y) matrix[x][y] = space.dist(y, x);
  return validate_space(space.labels(), std::move(matrix));
}

Rational min_positive_distance(const QuasimetricSpace& space) {
  std::optional<Rational> best;
  for (PointId x = 0; x < space.size(); ++x)
    for (PointId y = 0; y < space.size(); ++y) {
      if (x == y || space.dist(x, y).is_infinite()) continue;
      const Rational& d = space.dist(x, y).value();
      if (!best || d < *best) best = d;
    }
  if (!best) throw Error(ErrorCode::NoFiniteDistance, "no finite distance between distinct points");
  return *best;
}

std::vector<Grade> attainable_grades(const QuasimetricSpace& space, const Grade& max_grade) {
  // Reachable (endpoint, grade) states of tuples, explored in grade order.
  std::set<std::pair<Grade, PointId>> frontier;
  std::set<std::pair<Grade, PointId>> seen;
  for (PointId x = 0; x < space.size(); ++x) frontier.emplace(Grade(0), x);
  std::set<Grade> grades;
  while (!frontier.empty()) {
    auto state = *frontier.begin();
    frontier.erase(frontier.begin());
    if (!seen.insert(state).second) continue;
    grades.insert(state.first);
    for (PointId y = 0; y < space.size(); ++y) {
      if (y == state.second || space.dist(state.second, y).is_infinite()) continue;
      Grade next = state.first + space.dist(state.second, y).value();
      if (next <= max_grade) frontier.emplace(next, y);
    }
  }
  return {grades.begin(), grades.end()};
}

}  // namespace magnitude
