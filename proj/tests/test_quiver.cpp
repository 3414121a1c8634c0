#include <doctest.h>

#include <random>

#include "magnitude/error.hpp"
#include "magnitude/quiver.hpp"
#include "magnitude/random.hpp"
#include "suite.hpp"

using namespace magnitude;
using namespace magnitude::testing;

namespace {

const PresentationRow& row_at(const PresentationReport& r, std::size_t length) {
  for (const auto& row : r.rows)
    if (row.length == length) return row;
  FAIL("missing row");
  return r.rows.front();
}

QuiverRepresentation diamond_rep(long last) {
  QuiverRepresentation rep;
  rep.components = {{{0, 1}}, {{1, 1}}, {{1, 1}}, {{2, 1}}};
  rep.arcs[{0, 1}][0] = IntMatrix::identity(1);
  rep.arcs[{1, 3}][1] = IntMatrix::identity(1);
  rep.arcs[{0, 2}][0] = IntMatrix::identity(1);
  rep.arcs[{2, 3}][1] = IntMatrix(1, 1, {Integer(last)});
  return rep;
}

}  // namespace

TEST_CASE("paths and shortest paths") {
  auto g = diamond();
  CHECK(paths_of_length(g, 0).size() == 4);
  CHECK(paths_of_length(g, 1).size() == 4);
  CHECK(paths_of_length(g, 2) == std::vector<Path>{{0, 1, 3}, {0, 2, 3}});
  CHECK(paths_of_length(g, 3).empty());
  CHECK(shortest_paths(g).size() == 6);
  CHECK(paths_of_length(cycle(3), 5).size() == 3);
}

TEST_CASE("quiver relations") {
  auto d = quiver_relations(diamond());
  REQUIRE(d.r1.size() == 1);
  CHECK(d.r1[0].first == Path{0, 1, 3});
  CHECK(d.r1[0].second == Path{0, 2, 3});
  CHECK(d.r2.empty());

  auto x = quiver_relations(x2());
  CHECK(x.r1.empty());
  CHECK(x.r2.empty());

  auto k = quiver_relations(k2());
  CHECK(k.r1.empty());
  CHECK(k.r2 == std::vector<Path>{{0, 1, 0}, {1, 0, 1}});

  auto c = quiver_relations(cycle(3));
  CHECK(c.r1.empty());
  CHECK(c.r2 == std::vector<Path>{{0, 1, 2, 0}, {1, 2, 0, 1}, {2, 0, 1, 2}});
}

TEST_CASE("bound quiver dimensions") {
  auto c = bound_quiver_dimensions(cycle(3), 3);
  CHECK(row_at(c, 2).paths == 3);
  CHECK(row_at(c, 2).relation_rank == 0);
  CHECK(row_at(c, 2).quotient_dim == 3);
  CHECK(row_at(c, 2).pairs_at_distance == 3);
  CHECK(row_at(c, 3).quotient_dim == 0);
  CHECK(c.admissibility_exponent == 3);
  CHECK(c.ok());

  auto d = bound_quiver_dimensions(diamond(), 3);
  CHECK(row_at(d, 2).paths == 2);
  CHECK(row_at(d, 2).quotient_dim == 1);
  CHECK(row_at(d, 2).pairs_at_distance == 1);
  CHECK(row_at(d, 0).quotient_dim == 4);
  CHECK(d.ok());

  for (const auto& g : digraphs_up_to_isomorphism(3)) {
    auto r = check_bound_quiver_presentation(g, 4);
    CHECK(row_at(r, 0).quotient_dim == 3);
    CHECK(r.ok());
  }
}

TEST_CASE("representations of the diamond") {
  auto g = diamond();
  CHECK(representation_violations(g, diamond_rep(1)).empty());
  auto bad = diamond_rep(2);
  auto failures = representation_violations(g, bad);
  REQUIRE(failures.size() == 1);
  CHECK(failures[0].relation.size() == 2);
  CHECK(failures[0].grade == 0);
  try {
    check_representation_relations(g, bad);
    FAIL("expected RelationViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RelationViolation);
  }
  CHECK(path_map(bad, {0, 2, 3}, 0) == IntMatrix(1, 1, {Integer(2)}));
  CHECK(path_map(bad, {0, 1, 3}, 0) == IntMatrix::identity(1));
}

TEST_CASE("distance modules restrict to representations") {
  auto c3 = cycle(3);
  auto space = digraph_to_space(c3);
  CHECK_NOTHROW(check_representation_relations(c3, restrict_to_arcs(representable_module(space, 0), c3)));
  std::mt19937_64 rng(41);
  for (const auto& s : digraph_suite()) {
    auto sp = digraph_to_space(s.graph);
    CHECK(representation_violations(s.graph, restrict_to_arcs(trivial_module(sp, 0, 1), s.graph)).empty());
    for (int trial = 0; trial < 5; ++trial) {
      auto m = random_module(rng, sp, 3);
      CHECK(representation_violations(s.graph, restrict_to_arcs(m, s.graph)).empty());
    }
  }
  try {
    restrict_to_arcs(representable_module(space, 0), k2());
    FAIL("expected SpaceMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SpaceMismatch);
  }
}

TEST_CASE("R2 paths act by zero") {
  // K2 with identity arcs in both directions: x→y→x must vanish.
  auto g = k2();
  QuiverRepresentation rep;
  rep.components = {{{0, 1}, {1, 1}, {2, 1}}, {{0, 1}, {1, 1}, {2, 1}}};
  for (Grade gr : {Grade(0), Grade(1)}) {
    rep.arcs[{0, 1}][gr] = IntMatrix::identity(1);
    rep.arcs[{1, 0}][gr] = IntMatrix::identity(1);
  }
  auto failures = representation_violations(g, rep);
  REQUIRE_FALSE(failures.empty());
  CHECK(failures[0].relation.size() == 1);
}
