#include <doctest.h>

#include <memory>

#include "magnitude/error.hpp"
#include "magnitude/ring.hpp"
#include "suite.hpp"

using namespace magnitude;
using namespace magnitude::testing;

namespace {

using SpacePtr = std::shared_ptr<const QuasimetricSpace>;

SpacePtr share(const Digraph& g) { return std::make_shared<const QuasimetricSpace>(digraph_to_space(g)); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

const Field Q = Field::rationals();

}  // namespace

TEST_CASE("cohomology class counts") {
  auto k = share(k2());
  auto c11 = cohomology_classes(k, 1, 1, Q);
  CHECK(c11.size() == 2);
  CHECK(cohomology_classes(k, 1, 2, Q).size() == 0);
  for (const auto& g : digraph_suite()) CHECK(cohomology_classes(*share(g.graph), 0, 0, Q).size() == g.graph.size());

  auto dual_xy = dual_cochain(k, Q, {0, 1});
  auto coords = c11.coordinates(dual_xy);
  CHECK(coords.size() == 2);
  CHECK(code_of([&] { (void)c11.coordinates(dual_cochain(k, Q, {0, 1, 0})); }) == ErrorCode::NotACocycle);
}

TEST_CASE("cup on K2") {
  auto k = share(k2());
  auto psi = dual_cochain(k, Q, {0, 1});
  auto phi = dual_cochain(k, Q, {1, 0});
  auto product = cup(psi, phi);
  CHECK(product.degree == 2);
  CHECK(product.grade == 2);
  CHECK(product.values.size() == 1);
  CHECK(product.at({0, 1, 0}) == 1);
  CHECK(cup(psi, psi).is_zero());
}

TEST_CASE("unit law and point idempotents") {
  for (const auto& g : digraph_suite()) {
    auto s = share(g.graph);
    auto u = unit_cochain(s, Q);
    for (int n = 0; n <= 2; ++n)
      for (const auto& t : enumerate_tuples(*s, n, n, true)) {
        auto phi = dual_cochain(s, Q, t.points);
        CHECK(cup(u, phi) == phi);
        CHECK(cup(phi, u) == phi);
      }
    for (PointId x = 0; x < s->size(); ++x)
      for (PointId y = 0; y < s->size(); ++y) {
        auto prod = cup(dual_cochain(s, Q, {x}), dual_cochain(s, Q, {y}));
        if (x == y) {
          CHECK(prod == dual_cochain(s, Q, {x}));
        } else {
          CHECK(prod.is_zero());
        }
      }
  }
}

TEST_CASE("cup is associative on basis cochains") {
  auto s = share(cycle(3));
  std::vector<Cochain> basis;
  for (int n = 0; n <= 1; ++n)
    for (Grade g = 0; g <= 2; g += 1)
      for (const auto& t : enumerate_tuples(*s, n, g, true)) basis.push_back(dual_cochain(s, Q, t.points));
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) CHECK(cup(cup(a, b), c) == cup(a, cup(b, c)));
}

TEST_CASE("products of cocycles and coboundaries") {
  for (const auto& g : {cycle(3), diamond(), k2()}) {
    auto s = share(g);
    std::vector<Cochain> cocycles;
    for (int n = 0; n <= 1; ++n)
      for (Grade l = 0; l <= 2; l += 1) {
        auto classes = cohomology_classes(s, n, l, Q);
        for (const auto& c : classes.representatives()) cocycles.push_back(c);
      }
    for (const auto& a : cocycles)
      for (const auto& b : cocycles) CHECK(is_cocycle(cup(a, b)));

    for (int n = 0; n <= 1; ++n)
      for (Grade l = 0; l <= 2; l += 1)
        for (const auto& t : enumerate_tuples(*s, n, l, true)) {
          auto boundary = coboundary(dual_cochain(s, Q, t.points));
          if (boundary.is_zero()) continue;
          CHECK(is_coboundary(boundary));
          for (const auto& z : cocycles) {
            CHECK(is_coboundary(cup(z, boundary)));
            CHECK(is_coboundary(cup(boundary, z)));
          }
        }
  }
}

TEST_CASE("cup rejects mismatched inputs") {
  auto k = share(k2());
  auto x = share(x2());
  CHECK(code_of([&] { (void)cup(unit_cochain(k, Q), unit_cochain(x, Q)); }) == ErrorCode::SpaceMismatch);
  CHECK(code_of([&] { (void)cup(unit_cochain(k, Q), unit_cochain(k, Field::prime(2))); }) ==
        ErrorCode::InvalidField);
  CHECK_THROWS_AS(dual_cochain(k, Q, {0, 0}), Error);
}

TEST_CASE("Yoneda lifts") {
  auto s = share(k2());
  BarResolution left(*s, Side::Left, 3, 4);
  auto phi = dual_cochain(s, Q, {0, 1});
  for (int k = 0; k <= 2; ++k) CHECK(lift_commutes(left, phi, k));
  auto zero = zero_cochain(s, Q, 1, 1);
  CHECK(yoneda_lift(left, zero, 1).is_zero());

  // φ̂_0(y, x_0, x_1) = (y, x_0)·φ(x_0, x_1).
  auto lift0 = yoneda_lift(left, phi, 0);
  auto col = left.index_of(1, {0, 0, 1});
  auto row = left.index_of(0, {0, 0});
  REQUIRE(col.has_value());
  REQUIRE(row.has_value());
  CHECK(lift0.at(*row, *col) == 1);
  auto col2 = left.index_of(1, {1, 0, 1});
  auto row2 = left.index_of(0, {1, 0});
  REQUIRE(col2.has_value());
  REQUIRE(row2.has_value());
  CHECK(lift0.at(*row2, *col2) == 1);
  CHECK(code_of([&] { (void)yoneda_lift(left, phi, 3); }) == ErrorCode::ResolutionTooShort);
}

TEST_CASE("Yoneda product equals cup") {
  auto k = share(k2());
  BarResolution lk(*k, Side::Left, 3, 4);
  auto psi = dual_cochain(k, Q, {0, 1});
  auto phi = dual_cochain(k, Q, {1, 0});
  CHECK(yoneda_product(lk, psi, phi) == cup(psi, phi));

  auto u = unit_cochain(k, Q);
  auto classes = cohomology_classes(k, 1, 1, Q);
  auto coords = classes.coordinates(yoneda_product(lk, u, phi));
  CHECK(coords == classes.coordinates(phi));

  auto c = share(cycle(3));
  BarResolution lc(*c, Side::Left, 3, 4);
  auto ones = cohomology_classes(c, 1, 1, Q).representatives();
  for (const auto& a : ones)
    for (const auto& b : ones) {
      auto y = yoneda_product(lc, a, b);
      CHECK(y.degree == 2);
      CHECK(y.grade == 2);
      CHECK(y == cup(a, b));
    }

  auto not_cocycle = dual_cochain(c, Q, {0, 2});
  REQUIRE_FALSE(is_cocycle(not_cocycle));
  CHECK(code_of([&] { (void)yoneda_product(lc, ones.front(), not_cocycle); }) == ErrorCode::NotACocycle);
}

TEST_CASE("ring table of K2") {
  auto table = ring_table(digraph_to_space(k2()), 2, 2, Q);
  REQUIRE(table.classes.size() == 3);
  CHECK(table.classes.at({0, 0}).size() == 2);
  CHECK(table.classes.at({1, 1}).size() == 2);
  CHECK(table.classes.at({2, 2}).size() == 2);

  // Products of (1,1)-classes span the (2,2)-classes.
  EchelonBasis span(Q);
  for (const auto& p : table.products) {
    if (p.lhs_degree != 1 || p.rhs_degree != 1) continue;
    SparseVec v;
    for (const auto& [coeff, index] : p.result) v[index] = coeff;
    span.insert(v);
  }
  CHECK(span.rank() == 2);

  // The (0,0) block multiplies the point idempotents coordinatewise.
  for (const auto& p : table.products) {
    if (p.lhs_degree != 0 || p.rhs_degree != 0) continue;
    if (p.lhs_index != p.rhs_index) {
      CHECK(p.result.empty());
    } else {
      REQUIRE(p.result.size() == 1);
      CHECK(p.result[0].second == p.lhs_index);
    }
  }
}

TEST_CASE("ring tables over a prime field") {
  auto table = ring_table(digraph_to_space(cycle(3)), 2, 3, Field::prime(2));
  CHECK(table.field == Field::prime(2));
  for (const auto& [key, set] : table.classes) CHECK(set.size() > 0);
}
