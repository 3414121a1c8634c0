#include "magnitude/quiver.hpp"

#include <algorithm>
#include <set>

#include "magnitude/error.hpp"
#include "magnitude/linalg.hpp"

namespace magnitude {

namespace {

void walk(const Digraph& graph, Path& prefix, std::size_t length, std::vector<Path>& out) {
  if (prefix.size() == length + 1) {
    out.push_back(prefix);
    return;
  }
  for (PointId v : graph.successors(prefix.back())) {
    prefix.push_back(v);
    walk(graph, prefix, length, out);
    prefix.pop_back();
  }
}

bool is_shortest(const QuasimetricSpace& space, const Path& p, std::size_t from, std::size_t to) {
  const ExtDist& d = space.dist(p[from], p[to]);
  return d.is_finite() && d.value() == static_cast<long>(to - from);
}

std::string path_label(const Digraph& graph, const Path& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += "->";
    out += graph.vertices()[p[i]];
  }
  return out;
}

std::size_t max_shortest_length(const QuasimetricSpace& space) {
  std::size_t best = 0;
  for (PointId x = 0; x < space.size(); ++x)
    for (PointId y = 0; y < space.size(); ++y) {
      const ExtDist& d = space.dist(x, y);
      if (d.is_finite()) best = std::max(best, static_cast<std::size_t>(d.value().get_num().get_ui()));
    }
  return best;
}

/// Rank of the span of {a·r·b} inside the paths of the given length.
std::size_t relation_rank(const QuiverRelations& rel, const std::vector<Path>& paths) {
  std::map<Path, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index.emplace(paths[i], i);
  std::map<Path, std::vector<Path>> partners;
  for (const auto& [p, q] : rel.r1) {
    partners[p].push_back(q);
    partners[q].push_back(p);
  }
  std::set<Path> vanishing(rel.r2.begin(), rel.r2.end());

  std::vector<SparseVec> generators;
  for (const Path& path : paths) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      for (std::size_t j = i + 2; j < path.size(); ++j) {
        Path middle(path.begin() + static_cast<std::ptrdiff_t>(i), path.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        if (vanishing.count(middle)) generators.push_back({{index.at(path), Rational(1)}});
        auto it = partners.find(middle);
        if (it == partners.end()) continue;
        for (const Path& other : it->second) {
          Path swapped(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(i));
          swapped.insert(swapped.end(), other.begin(), other.end());
          swapped.insert(swapped.end(), path.begin() + static_cast<std::ptrdiff_t>(j) + 1, path.end());
          generators.push_back({{index.at(path), Rational(1)}, {index.at(swapped), Rational(-1)}});
        }
      }
  }
  SparseRatMatrix m(generators.size(), paths.size());
  for (std::size_t r = 0; r < generators.size(); ++r)
    for (const auto& [c, v] : generators[r]) m.set(r, c, v);
  return rank_over_field(m, Field::rationals());
}

}  // namespace

std::vector<Path> paths_of_length(const Digraph& graph, std::size_t length) {
  std::vector<Path> out;
  for (PointId x = 0; x < graph.size(); ++x) {
    Path prefix{x};
    walk(graph, prefix, length, out);
  }
  return out;
}

std::vector<Path> shortest_paths(const Digraph& graph) {
  QuasimetricSpace space = digraph_to_space(graph);
  std::vector<Path> out;
  std::vector<Path> stack;
  for (PointId x = 0; x < graph.size(); ++x) stack.push_back({x});
  while (!stack.empty()) {
    Path p = std::move(stack.back());
    stack.pop_back();
    if (p.size() > 1) out.push_back(p);
    for (PointId v : graph.successors(p.back())) {
      Path q = p;
      q.push_back(v);
      if (is_shortest(space, q, 0, q.size() - 1)) stack.push_back(std::move(q));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuiverRelations quiver_relations(const Digraph& graph) {
  QuasimetricSpace space = digraph_to_space(graph);
  std::vector<Path> shortest = shortest_paths(graph);
  QuiverRelations rel;
  std::map<std::pair<PointId, PointId>, std::vector<Path>> by_ends;
  for (const Path& p : shortest) by_ends[{p.front(), p.back()}].push_back(p);
  for (const auto& [ends, group] : by_ends)
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j) rel.r1.emplace_back(group[i], group[j]);
  for (const Path& p : shortest) {
    for (PointId v : graph.successors(p.back())) {
      Path q = p;
      q.push_back(v);
      if (!is_shortest(space, q, 0, q.size() - 1) && is_shortest(space, q, 1, q.size() - 1)) rel.r2.push_back(q);
    }
  }
  std::sort(rel.r1.begin(), rel.r1.end());
  std::sort(rel.r2.begin(), rel.r2.end());
  return rel;
}

bool PresentationReport::dimensions_match() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const PresentationRow& r) { return r.quotient_dim == r.pairs_at_distance; });
}

PresentationReport bound_quiver_dimensions(const Digraph& graph, std::size_t l_max) {
  QuasimetricSpace space = digraph_to_space(graph);
  QuiverRelations rel = quiver_relations(graph);
  PresentationReport report;
  for (std::size_t length = 0; length <= l_max; ++length) {
    PresentationRow row;
    row.length = length;
    std::vector<Path> paths = paths_of_length(graph, length);
    row.paths = paths.size();
    row.relation_rank = relation_rank(rel, paths);
    row.quotient_dim = row.paths - row.relation_rank;
    for (PointId x = 0; x < space.size(); ++x)
      for (PointId y = 0; y < space.size(); ++y)
        if (space.dist(x, y) == ExtDist(static_cast<long>(length))) ++row.pairs_at_distance;
    report.rows.push_back(row);
  }
  report.relations_in_square =
      std::all_of(rel.r1.begin(), rel.r1.end(), [](const auto& pq) { return pq.first.size() >= 3; }) &&
      std::all_of(rel.r2.begin(), rel.r2.end(), [](const Path& p) { return p.size() >= 3; });
  report.admissibility_exponent = max_shortest_length(space) + 1;
  std::vector<Path> top = paths_of_length(graph, report.admissibility_exponent);
  report.power_in_relations = relation_rank(rel, top) == top.size();
  return report;
}

PresentationReport check_bound_quiver_presentation(const Digraph& graph, std::size_t l_max) {
  PresentationReport report = bound_quiver_dimensions(graph, l_max);
  for (const auto& row : report.rows) {
    if (row.quotient_dim != row.pairs_at_distance) {
      throw Error(ErrorCode::DimensionMismatch,
                  "dim (KG/R)_" + std::to_string(row.length) + " = " + std::to_string(row.quotient_dim) +
                      " but " + std::to_string(row.pairs_at_distance) + " pairs lie at that distance",
                  {std::to_string(row.length)});
    }
  }
  if (!report.relations_in_square) throw Error(ErrorCode::DimensionMismatch, "a relation has length below 2");
  if (!report.power_in_relations) {
    throw Error(ErrorCode::DimensionMismatch,
                "some path of length " + std::to_string(report.admissibility_exponent) + " is not in R(G)",
                {std::to_string(report.admissibility_exponent)});
  }
  return report;
}

QuiverRepresentation restrict_to_arcs(const DistanceModule& module, const Digraph& graph) {
  if (!(module.space() == digraph_to_space(graph))) {
    throw Error(ErrorCode::SpaceMismatch, "module does not live over the digraph's space");
  }
  QuiverRepresentation rep;
  for (PointId x = 0; x < graph.size(); ++x) {
    std::map<Grade, std::size_t> comps;
    for (const auto& [g, rank] : module.components(x))
      if (rank) comps.emplace(g, rank);
    rep.components.push_back(std::move(comps));
  }
  for (const auto& [u, v] : graph.arcs())
    for (const auto& [g, rank] : rep.components[u]) rep.arcs[{u, v}].emplace(g, module.action(u, v, g));
  return rep;
}

IntMatrix path_map(const QuiverRepresentation& rep, const Path& path, const Grade& grade) {
  auto rank = [&](PointId x, const Grade& g) -> std::size_t {
    auto it = rep.components.at(x).find(g);
    return it == rep.components.at(x).end() ? 0 : it->second;
  };
  IntMatrix out = IntMatrix::identity(rank(path.front(), grade));
  Grade g = grade;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const std::pair<PointId, PointId> arc{path[i], path[i + 1]};
    IntMatrix step = IntMatrix::zero(rank(arc.second, g + 1), rank(arc.first, g));
    if (auto it = rep.arcs.find(arc); it != rep.arcs.end()) {
      if (auto m = it->second.find(g); m != it->second.end()) {
        if (m->second.rows() != step.rows() || m->second.cols() != step.cols()) {
          throw Error(ErrorCode::ShapeMismatch, "arc map has the wrong shape");
        }
        step = m->second;
      }
    }
    out = step * out;
    g += 1;
  }
  return out;
}

std::vector<RelationFailure> representation_violations(const Digraph& graph, const QuiverRepresentation& rep) {
  if (rep.components.size() != graph.size()) {
    throw Error(ErrorCode::ShapeMismatch, "representation has the wrong number of vertices");
  }
  QuiverRelations rel = quiver_relations(graph);
  std::vector<RelationFailure> out;
  for (const auto& [p, q] : rel.r1)
    for (const auto& [g, rank] : rep.components[p.front()]) {
      if (rank && !(path_map(rep, p, g) == path_map(rep, q, g))) out.push_back({{p, q}, g});
    }
  for (const Path& p : rel.r2)
    for (const auto& [g, rank] : rep.components[p.front()]) {
      if (rank && !path_map(rep, p, g).is_zero()) out.push_back({{p}, g});
    }
  return out;
}

void check_representation_relations(const Digraph& graph, const QuiverRepresentation& rep) {
  auto failures = representation_violations(graph, rep);
  if (failures.empty()) return;
  const auto& f = failures.front();
  std::vector<std::string> witness;
  for (const Path& p : f.relation) witness.push_back(path_label(graph, p));
  witness.push_back(format_rational(f.grade));
  std::string message = f.relation.size() == 2 ? "paths " + witness[0] + " and " + witness[1] + " act differently"
                                                : "path " + witness[0] + " acts nontrivially";
  message += " at grade " + witness.back();
  throw Error(ErrorCode::RelationViolation, message, std::move(witness));
}

}  // namespace magnitude
