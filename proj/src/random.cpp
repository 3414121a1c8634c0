#include "magnitude/random.hpp"

#include <functional>
#include <map>

#include "magnitude/error.hpp"

namespace magnitude {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

/// Every action written out explicitly, for all finite pairs and represented grades.
ModuleData explicit_data(const DistanceModule& m) {
  const QuasimetricSpace& space = m.space();
  ModuleData data;
  data.components.resize(space.size());
  for (PointId x = 0; x < space.size(); ++x)
    for (const auto& [g, r] : m.components(x))
      if (r) data.components[x][g] = r;
  for (PointId x = 0; x < space.size(); ++x)
    for (PointId y = 0; y < space.size(); ++y) {
      if (space.dist(x, y).is_infinite()) continue;
      for (const auto& [g, r] : data.components[x]) data.actions[{x, y}][g] = m.action(x, y, g);
    }
  return data;
}

/// Quotient by the span of the components where `drop` holds; `drop` must be
/// closed under the actions.
DistanceModule drop_components(const DistanceModule& m, const std::function<bool(PointId, const Grade&)>& drop) {
  const QuasimetricSpace& space = m.space();
  ModuleData full = explicit_data(m);
  ModuleData data;
  data.components.resize(space.size());
  for (PointId x = 0; x < space.size(); ++x)
    for (const auto& [g, r] : full.components[x])
      if (!drop(x, g)) data.components[x][g] = r;
  for (const auto& [pair, by_grade] : full.actions)
    for (const auto& [g, mat] : by_grade) {
      Grade target = g + space.dist(pair.first, pair.second).value();
      if (drop(pair.first, g)) continue;
      if (drop(pair.second, target)) {
        data.actions[pair][g] = IntMatrix::zero(0, mat.cols());
      } else {
        data.actions[pair][g] = mat;
      }
    }
  return DistanceModule::create(space, std::move(data));
}

DistanceModule scale_actions(const DistanceModule& m, long lambda) {
  const QuasimetricSpace& space = m.space();
  ModuleData data = explicit_data(m);
  for (auto& [pair, by_grade] : data.actions) {
    const Rational& d = space.dist(pair.first, pair.second).value();
    Integer factor;
    mpz_pow_ui(factor.get_mpz_t(), Integer(lambda).get_mpz_t(), d.get_num().get_ui());
    for (auto& [g, mat] : by_grade)
      for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j) mat(i, j) *= factor;
  }
  return DistanceModule::create(space, std::move(data));
}

/// A random product of elementary matrices and its inverse.
std::pair<IntMatrix, IntMatrix> random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix p = IntMatrix::identity(n);
  IntMatrix q = IntMatrix::identity(n);
  for (int step = 0; step < 4; ++step) {
    std::size_t i = uniform(rng, n);
    std::size_t j = uniform(rng, n);
    if (i == j) {
      // Row sign flip, its own inverse.
      IntMatrix e = IntMatrix::identity(n);
      e(i, i) = -1;
      p = e * p;
      q = q * e;
      continue;
    }
    long c = static_cast<long>(uniform(rng, 5)) - 2;
    IntMatrix e = IntMatrix::identity(n);
    IntMatrix inv = IntMatrix::identity(n);
    e(i, j) = c;
    inv(i, j) = -c;
    p = e * p;
    q = q * inv;
  }
  return {p, q};
}

DistanceModule change_bases(std::mt19937_64& rng, const DistanceModule& m) {
  const QuasimetricSpace& space = m.space();
  ModuleData data = explicit_data(m);
  std::map<std::pair<PointId, Grade>, std::pair<IntMatrix, IntMatrix>> change;
  for (PointId x = 0; x < space.size(); ++x)
    for (const auto& [g, r] : data.components[x]) change.emplace(std::make_pair(x, g), random_unimodular(rng, r));
  for (auto& [pair, by_grade] : data.actions)
    for (auto& [g, mat] : by_grade) {
      Grade target = g + space.dist(pair.first, pair.second).value();
      auto to = change.find({pair.second, target});
      if (to == change.end()) continue;  // zero target component
      mat = to->second.first * mat * change.at({pair.first, g}).second;
    }
  return DistanceModule::create(space, std::move(data));
}

bool integer_distances(const QuasimetricSpace& space) {
  for (PointId x = 0; x < space.size(); ++x)
    for (PointId y = 0; y < space.size(); ++y) {
      const ExtDist& d = space.dist(x, y);
      if (d.is_finite() && d.value().get_den() != 1) return false;
    }
  return true;
}

DistanceModule random_piece(std::mt19937_64& rng, const QuasimetricSpace& space, const Grade& max_grade) {
  if (uniform(rng, 2) == 0) {
    long top = max_grade.get_num().get_si() / max_grade.get_den().get_si();
    return trivial_module(space, Grade(static_cast<long>(uniform(rng, static_cast<std::size_t>(top) + 1))), 1);
  }
  PointId x = uniform(rng, space.size());
  DistanceModule piece = shift_module(representable_module(space, x), Grade(static_cast<long>(uniform(rng, 2))));
  if (uniform(rng, 2) == 0) {
    std::vector<PointId> reachable;
    for (PointId u = 0; u < space.size(); ++u)
      if (space.dist(x, u).is_finite()) reachable.push_back(u);
    PointId u = reachable[uniform(rng, reachable.size())];
    // {z : u lies between x and z} is closed under the actions of e_x·σX.
    piece = drop_components(piece, [&](PointId z, const Grade&) { return between(space, x, u, z); });
  }
  return piece;
}

}  // namespace

QuasimetricSpace random_space(std::mt19937_64& rng, std::size_t points) {
  static const std::vector<ExtDist> grid = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2),
                                            ExtDist::infinity()};
  std::vector<std::vector<ExtDist>> d(points, std::vector<ExtDist>(points, ExtDist(0)));
  for (std::size_t x = 0; x < points; ++x)
    for (std::size_t y = 0; y < points; ++y)
      if (x != y) d[x][y] = grid[uniform(rng, grid.size())];
  for (std::size_t k = 0; k < points; ++k)
    for (std::size_t x = 0; x < points; ++x)
      for (std::size_t y = 0; y < points; ++y) {
        ExtDist via = d[x][k] + d[k][y];
        if (via < d[x][y]) d[x][y] = via;
      }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < points; ++i) labels.push_back("p" + std::to_string(i));
  return validate_space(std::move(labels), std::move(d));
}

Digraph random_digraph(std::mt19937_64& rng, std::size_t vertices, double arc_probability) {
  std::bernoulli_distribution coin(arc_probability);
  std::vector<std::pair<PointId, PointId>> arcs;
  for (PointId u = 0; u < vertices; ++u)
    for (PointId v = 0; v < vertices; ++v)
      if (u != v && coin(rng)) arcs.emplace_back(u, v);
  return Digraph(vertices, arcs);
}

DistanceModule random_module(std::mt19937_64& rng, const QuasimetricSpace& space, const Grade& max_grade) {
  if (space.size() == 0) throw Error(ErrorCode::InvalidArgument, "random modules need a nonempty space");
  if (max_grade < 0) throw Error(ErrorCode::InvalidArgument, "max_grade must be nonnegative");
  DistanceModule m = random_piece(rng, space, max_grade);
  if (uniform(rng, 2) == 0) m = direct_sum(m, random_piece(rng, space, max_grade));
  if (integer_distances(space)) {
    static const long lambdas[] = {1, 2, -1};
    m = scale_actions(m, lambdas[uniform(rng, 3)]);
  }
  m = drop_components(m, [&](PointId, const Grade& g) { return g > max_grade; });
  return change_bases(rng, m);
}

}  // namespace magnitude
