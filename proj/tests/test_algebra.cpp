#include <doctest.h>

#include <random>

#include "magnitude/algebra.hpp"
#include "magnitude/derived.hpp"
#include "magnitude/error.hpp"
#include "magnitude/random.hpp"
#include "magnitude/resolution.hpp"
#include "suite.hpp"

using namespace magnitude;
using namespace magnitude::testing;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("distance algebra products on C3") {
  DistanceAlgebra alg(digraph_to_space(cycle(3)));
  CHECK(alg.multiply(Pair{0, 1}, Pair{1, 2}) == Pair{0, 2});
  CHECK_FALSE(alg.multiply(Pair{0, 1}, Pair{1, 0}).has_value());
  CHECK_FALSE(alg.multiply(Pair{0, 1}, Pair{2, 0}).has_value());
  CHECK(alg.multiply(alg.idempotent(0), alg.pair(0, 1)) == alg.pair(0, 1));
  CHECK(alg.multiply(alg.pair(0, 1), alg.idempotent(1)) == alg.pair(0, 1));

  auto lhs = alg.pair(0, 1) + alg.pair(1, 2);
  CHECK(algebra_multiply(alg, lhs, alg.pair(2, 0)) == alg.pair(1, 0));
  CHECK(alg.degree(Pair{0, 1}) + alg.degree(Pair{1, 2}) == alg.degree(Pair{0, 2}));
  CHECK(alg.is_associative());
}

TEST_CASE("unit laws and associativity on random spaces") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    DistanceAlgebra alg(random_space(rng, 1 + trial % 4));
    CHECK(alg.is_associative());
    std::uniform_int_distribution<int> coeff(-3, 3);
    AlgebraElement x;
    for (const auto& p : alg.basis()) x.add(p, coeff(rng));
    CHECK(alg.multiply(x, alg.unit()) == x);
    CHECK(alg.multiply(alg.unit(), x) == x);
    for (const auto& [g, part] : alg.homogeneous_parts(x))
      for (const auto& [p, c] : part.terms) CHECK(alg.degree(p) == g);
  }
}

TEST_CASE("pairs at infinite distance are not in the algebra") {
  DistanceAlgebra alg(digraph_to_space(x2()));
  CHECK(alg.basis().size() == 3);
  CHECK_FALSE(alg.contains(Pair{1, 0}));
  CHECK(code_of([&] { (void)alg.pair(1, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("radical powers and nilpotency") {
  for (const auto& s : digraph_suite()) {
    DistanceAlgebra alg(digraph_to_space(s.graph));
    auto powers = radical_powers(alg);
    REQUIRE_FALSE(powers.empty());
    CHECK(powers.back().empty());
    CHECK(nilpotency_index(alg) <= s.graph.size());
  }
  // A directed path of length k has (JX)^k ≠ 0 and (JX)^{k+1} = 0.
  Digraph path = make_digraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  CHECK(nilpotency_index(DistanceAlgebra(digraph_to_space(path))) == 4);
  CHECK(nilpotency_index(DistanceAlgebra(digraph_to_space(k2()))) == 2);
}

TEST_CASE("the simple module S") {
  DistanceAlgebra alg(digraph_to_space(cycle(3)));
  auto s = quotient_module_S(alg);
  CHECK(s.rank(0) == 3);
  CHECK(s.rank(1) == 0);
  for (const auto& p : alg.basis())
    for (PointId z = 0; z < 3; ++z) {
      if (p.first != p.second) {
        CHECK(s.act_right(z, p) == 0);
        CHECK(s.act_left(p, z) == 0);
      } else {
        CHECK(s.act_right(z, p) == (p.first == z ? 1 : 0));
      }
    }
  CHECK(s.as_distance_module(alg.space()) == trivial_module(alg.space(), 0, 1));
}

TEST_CASE("right bar resolution over X2") {
  auto space = digraph_to_space(x2());
  BarResolution right(space, Side::Right, 2, 1);
  std::vector<std::vector<PointId>> p0;
  for (const auto& t : right.basis(0)) p0.push_back(t.points);
  CHECK(p0 == std::vector<std::vector<PointId>>{{0, 0}, {0, 1}, {1, 1}});
  auto eps = right.augmentation();
  CHECK(eps.at(0, 0) == 1);
  CHECK(eps.at(0, 1) == 0);
  CHECK(eps.at(1, 1) == 0);
  CHECK(eps.at(1, 2) == 1);
  CHECK(right.is_exact());
  CHECK_THROWS_AS(right.basis(3), Error);
}

TEST_CASE("P_n is a sum of shifted projectives") {
  auto space = digraph_to_space(x2());
  for (Side side : {Side::Right, Side::Left}) {
    BarResolution res(space, side, 2, 3);
    for (int n = 0; n <= 2; ++n)
      for (Grade g = 0; g <= 3; g += 1) {
        std::size_t expected = 0;
        for (Grade inner = 0; inner <= g; inner += 1)
          for (const auto& t : enumerate_tuples(space, n, inner, false)) {
            PointId end = side == Side::Right ? t.points.back() : t.points.front();
            for (PointId y = 0; y < space.size(); ++y) {
              const ExtDist& d = side == Side::Right ? space.dist(end, y) : space.dist(y, end);
              if (d.is_finite() && d.value() == g - inner) ++expected;
            }
          }
        CHECK(res.indices_at(n, g).size() == expected);
      }
  }
}

TEST_CASE("bar resolutions are exact") {
  auto c3 = digraph_to_space(cycle(3));
  BarResolution right(c3, Side::Right, 3, 2);
  for (Grade g = 0; g <= 2; g += 1) {
    auto h = right.homology(1, g);
    CHECK(h.betti == 0);
    CHECK(h.torsion.empty());
  }
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    auto s = random_space(rng, 3);
    for (Side side : {Side::Right, Side::Left}) {
      BarResolution res(s, side, 3, 2);
      CHECK(res.is_complex());
      CHECK(res.is_exact());
    }
  }
}

TEST_CASE("generator decomposition and actions") {
  auto space = digraph_to_space(cycle(3));
  BarResolution left(space, Side::Left, 2, 3);
  auto [gen, pair] = left.decompose({2, 0, 1});
  CHECK(gen == std::vector<PointId>{0, 0, 1});
  CHECK(pair == Pair{2, 0});
  CHECK(left.act(gen, pair) == std::vector<PointId>{2, 0, 1});
  CHECK(left.is_generator({0, 0, 1}));
  CHECK_FALSE(left.is_generator({2, 0, 1}));
  // c lies between b and a, but not between a and a.
  CHECK(left.act({2, 0, 1}, Pair{1, 2}) == std::vector<PointId>{1, 0, 1});
  CHECK_FALSE(left.act({2, 0, 1}, Pair{0, 2}).has_value());

  BarResolution right(space, Side::Right, 2, 3);
  auto [rgen, rpair] = right.decompose({0, 1, 0});
  CHECK(rgen == std::vector<PointId>{0, 1, 1});
  CHECK(rpair == Pair{1, 0});
}

TEST_CASE("Tor examples") {
  auto k = digraph_to_space(k2());
  auto triv = trivial_module(k, 0, 1);
  CHECK(tor_bidegree(k, triv, 0, 0).betti == 2);
  for (int n = 1; n <= 3; ++n) {
    auto h = tor_bidegree(k, triv, n, n);
    CHECK(h.betti == 2);
    CHECK(h.torsion.empty());
    CHECK(tor_bidegree(k, triv, n, n + 1).betti == 0);
  }
  auto x = digraph_to_space(x2());
  CHECK(tor_bidegree(x, trivial_module(x, 0, 1), 1, 1).betti == 1);
}

TEST_CASE("Tor needs a long enough left resolution") {
  auto k = digraph_to_space(k2());
  auto triv = trivial_module(k, 0, 1);
  BarResolution left(k, Side::Left, 2, 2);
  CHECK(code_of([&] { (void)tor_bidegree(left, triv, 2, 2); }) == ErrorCode::ResolutionTooShort);
  CHECK(code_of([&] { (void)tor_bidegree(left, triv, 1, 3); }) == ErrorCode::ResolutionTooShort);
  BarResolution right(k, Side::Right, 2, 2);
  CHECK_THROWS_AS(tor_bidegree(right, triv, 1, 1), Error);
  auto other = trivial_module(digraph_to_space(x2()), 0, 1);
  CHECK(code_of([&] { (void)tor_bidegree(left, other, 1, 1); }) == ErrorCode::SpaceMismatch);
}

TEST_CASE("Tor with coefficients matches the coefficient complex") {
  std::mt19937_64 rng(37);
  auto suite = digraph_suite();
  for (int trial = 0; trial < 24; ++trial) {
    auto space = digraph_to_space(suite[trial % suite.size()].graph);
    auto m = random_module(rng, space, 2);
    BarResolution left(space, Side::Left, 3, 3);
    for (Grade g = 0; g <= 3; g += 1) {
      auto chain = magnitude_complex_with_coefficients(space, m, g, 2);
      for (int n = 0; n <= 2; ++n) {
        Grade lowest = 0;
        if (!m.grades().empty()) lowest = m.grades().front();
        if (g - lowest > 3) continue;
        CHECK(tor_bidegree(left, m, n, g) == chain.homology(n));
      }
    }
  }
}

TEST_CASE("Ext examples") {
  auto k = digraph_to_space(k2());
  auto triv = trivial_module(k, 0, 1);
  CHECK(ext_bidegree(k, triv, 0, 0, Field::rationals()) == 2);
  for (int n = 1; n <= 3; ++n) CHECK(ext_bidegree(k, triv, n, n, Field::rationals()) == 2);
  auto x = digraph_to_space(x2());
  CHECK(ext_bidegree(x, trivial_module(x, 0, 1), 1, 1, Field::prime(2)) == 1);

  BarResolution right(k, Side::Right, 2, 2);
  CHECK(code_of([&] { (void)ext_bidegree(right, triv, 2, 2, Field::rationals()); }) ==
        ErrorCode::ResolutionTooShort);
}
