#include <doctest.h>

#include <algorithm>
#include <random>

#include "magnitude/distmod.hpp"
#include "magnitude/error.hpp"
#include "magnitude/random.hpp"
#include "suite.hpp"

using namespace magnitude;
using namespace magnitude::testing;

namespace {

std::size_t inv_rank(const DistanceModule& m, const Grade& g) {
  for (const auto& row : invariants(m))
    if (row.grade == g) return row.rank;
  return 0;
}

CoinvariantsAtGrade coinv_at(const DistanceModule& m, const Grade& g) {
  for (const auto& row : coinvariants(m))
    if (row.grade == g) return row;
  return {g, 0, {}};
}

ModuleData x2_data(long action, long self) {
  ModuleData d;
  d.components = {{{0, 1}}, {{1, 1}}};
  d.actions[{0, 1}][0] = IntMatrix(1, 1, {Integer(action)});
  if (self != 1) d.actions[{0, 0}][0] = IntMatrix(1, 1, {Integer(self)});
  return d;
}

bool has_kind(const std::vector<ModuleViolation>& v, ErrorCode code) {
  return std::any_of(v.begin(), v.end(), [&](const auto& x) { return x.kind == code; });
}

std::vector<QuasimetricSpace> suite_spaces() {
  std::vector<QuasimetricSpace> out;
  for (const auto& s : digraph_suite()) out.push_back(digraph_to_space(s.graph));
  return out;
}

}  // namespace

TEST_CASE("trivial and representable modules are valid") {
  for (const auto& space : suite_spaces()) {
    auto triv = trivial_module(space, 0, 1);
    CHECK(validate_module(space, triv.data()).empty());
    for (PointId x = 0; x < space.size(); ++x) {
      auto rep = representable_module(space, x);
      CHECK(validate_module(space, rep.data()).empty());
    }
  }
}

TEST_CASE("representable module over X2") {
  auto space = digraph_to_space(x2());
  auto rep = representable_module(space, 0);
  CHECK(rep.rank(0, 0) == 1);
  CHECK(rep.rank(1, 1) == 1);
  CHECK(rep.rank(1, 0) == 0);
  CHECK(rep.action(0, 1, 0) == IntMatrix::identity(1));
  CHECK(rep == DistanceModule::create(space, x2_data(1, 1)));

  auto point = validate_space({"p"}, {{0}});
  auto r = representable_module(point, 0);
  CHECK(r.grades() == std::vector<Grade>{0});
  CHECK(r.rank(0, 0) == 1);
}

TEST_CASE("validate_module reports violations") {
  auto space = digraph_to_space(x2());
  auto v = validate_module(space, x2_data(2, 3));
  CHECK(has_kind(v, ErrorCode::IdentityViolation));
  CHECK(has_kind(v, ErrorCode::CompositionViolation));
  try {
    DistanceModule::create(space, x2_data(2, 3));
    FAIL("expected a violation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IdentityViolation);
    CHECK(e.witness() == std::vector<std::string>{"a", "a", "0"});
  }

  ModuleData wrong = x2_data(1, 1);
  wrong.actions[{0, 1}][0] = IntMatrix(2, 1);
  CHECK(has_kind(validate_module(space, wrong), ErrorCode::ShapeMismatch));

  ModuleData backwards = x2_data(1, 1);
  backwards.actions[{1, 0}][1] = IntMatrix(0, 1);
  CHECK(has_kind(validate_module(space, backwards), ErrorCode::ShapeMismatch));
}

TEST_CASE("composites across a non-between point must vanish") {
  auto space = digraph_to_space(k2());
  ModuleData data;
  data.components = {{{0, 1}, {1, 1}, {2, 1}}, {{0, 1}, {1, 1}, {2, 1}}};
  for (Grade g : {Grade(0), Grade(1)}) {
    data.actions[{0, 1}][g] = IntMatrix::identity(1);
    data.actions[{1, 0}][g] = IntMatrix::identity(1);
  }
  auto v = validate_module(space, data);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().kind == ErrorCode::CompositionViolation);
  CHECK(v.front().points == std::vector<PointId>{0, 1, 0});
  CHECK(v.front().message == "composition law fails for (x,y,x) at grade 0");
}

TEST_CASE("trivial and shifted modules") {
  auto space = digraph_to_space(k2());
  auto zero = trivial_module(space, 2, 0);
  CHECK(zero.grades().empty());
  CHECK(invariants(zero).empty());
  CHECK(coinvariants(zero).empty());

  auto triv = trivial_module(space, 0, 1);
  CHECK(trivial_module(space, 3, 1) == shift_module(triv, 3));
  CHECK(shift_module(triv, 0) == triv);
  CHECK(shift_module(triv, 2).grades() == std::vector<Grade>{2});
  auto rep = representable_module(space, 1);
  CHECK(shift_module(shift_module(rep, Rational(3, 2)), Rational(-3, 2)) == rep);
}

TEST_CASE("invariants and coinvariants examples") {
  auto k = digraph_to_space(k2());
  auto triv = trivial_module(k, 0, 1);
  CHECK(inv_rank(triv, 0) == 2);
  CHECK(coinv_at(triv, 0).betti == 2);
  CHECK(hom_from_trivial(triv, 0) == 2);
  CHECK(hom_from_trivial(triv, 1) == 0);

  auto x = digraph_to_space(x2());
  auto rep = representable_module(x, 0);
  CHECK(inv_rank(rep, 0) == 0);
  CHECK(inv_rank(rep, 1) == 1);
  CHECK(hom_from_trivial(rep, 1) == 1);
  CHECK(coinv_at(rep, 0).betti == 1);
  CHECK(coinv_at(rep, 1).betti == 0);
  CHECK(coinv_at(rep, 1).torsion.empty());

  auto doubled = DistanceModule::create(x, x2_data(2, 1));
  CHECK(coinv_at(doubled, 1).betti == 0);
  CHECK(coinv_at(doubled, 1).torsion == std::vector<Integer>{2});
  CHECK(inv_rank(doubled, 0) == 0);
}

TEST_CASE("trivial modules keep their ranks") {
  for (const auto& space : suite_spaces()) {
    auto triv = trivial_module(space, 1, 2);
    CHECK(inv_rank(triv, 1) == 2 * space.size());
    CHECK(coinv_at(triv, 1).betti == 2 * space.size());
  }
}

TEST_CASE("random modules: hom_from_trivial, shifts and direct sums") {
  std::mt19937_64 rng(21);
  auto spaces = suite_spaces();
  for (int trial = 0; trial < 40; ++trial) {
    const auto& space = spaces[trial % spaces.size()];
    auto m = random_module(rng, space, 3);
    CHECK(validate_module(space, m.data()).empty());
    for (const auto& row : invariants(m)) CHECK(hom_from_trivial(m, row.grade) == row.rank);

    Grade s = Rational(1, 2);
    auto shifted = shift_module(m, s);
    for (const auto& row : invariants(m)) CHECK(inv_rank(shifted, row.grade + s) == row.rank);
    for (const auto& row : coinvariants(m)) {
      auto other = coinv_at(shifted, row.grade + s);
      CHECK(other.betti == row.betti);
      CHECK(other.torsion == row.torsion);
    }

    auto sum = direct_sum(m, trivial_module(space, 0, 1));
    CHECK(validate_module(space, sum.data()).empty());
    CHECK(inv_rank(sum, 0) == inv_rank(m, 0) + space.size());
  }
}

TEST_CASE("direct_sum needs a common space") {
  auto a = trivial_module(digraph_to_space(k2()), 0, 1);
  auto b = trivial_module(digraph_to_space(x2()), 0, 1);
  try {
    direct_sum(a, b);
    FAIL("expected SpaceMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SpaceMismatch);
  }
}
