// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "magnitude/algebra.hpp"
#include "magnitude/chain.hpp"
#include "magnitude/derived.hpp"
#include "magnitude/distmod.hpp"
#include "magnitude/quiver.hpp"
#include "magnitude/random.hpp"
#include "magnitude/resolution.hpp"
#include "magnitude/ring.hpp"
#include "suite.hpp"

using namespace magnitude;
using namespace magnitude::testing;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::vector<Grade> integer_grades(int top) {
  std::vector<Grade> out;
  for (int l = 0; l <= top; ++l) out.emplace_back(l);
  return out;
}

std::string at(const std::string& name, int n, const Grade& l) {
  return name + " at (" + std::to_string(n) + "," + l.get_str() + ")";
}

bool squares_vanish(const BasedComplex& c) {
  for (std::size_t n = 1; n + 1 < c.boundaries.size(); ++n)
    if (!(c.boundaries[n] * c.boundaries[n + 1]).is_zero()) return false;
  return true;
}

bool squares_vanish(const CochainComplex& c) {
  for (std::size_t n = 0; n + 1 < c.coboundaries.size(); ++n)
    if (!reduce_into(c.coboundaries[n + 1] * c.coboundaries[n], c.field).is_zero()) return false;
  return true;
}

void complexes_valid(Outcome& out, const QuasimetricSpace& s, const Grade& l_max, const std::string& name) {
  for (const Grade& g : attainable_grades(s, l_max)) {
    auto chain = magnitude_complex(s, g, 5);
    if (!squares_vanish(chain)) out.fail("chain complex of " + name + " at grade " + g.get_str());
    auto cochain = magnitude_cochain_complex(s, g, 5, Q);
    if (!squares_vanish(cochain)) out.fail("cochain complex of " + name + " at grade " + g.get_str());
  }
}

Outcome complex_validity() {
  Outcome out;
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& g : digraphs_up_to_isomorphism(n)) {
      complexes_valid(out, digraph_to_space(g), 5, "digraph #" + std::to_string(graphs));
      ++graphs;
    }
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    auto s = random_space(rng, 1 + i % 4);
    complexes_valid(out, s, 3, "random space #" + std::to_string(i));
  }
  if (out.ok) out.detail = std::to_string(graphs) + " digraphs, 200 random spaces";
  return out;
}

Outcome k2_ladder() {
  Outcome out;
  auto s = digraph_to_space(k2());
  for (const Grade& l : integer_grades(5)) {
    auto c = magnitude_complex(s, l, 5);
    for (int n = 0; n <= 5; ++n) {
      auto h = c.homology(n);
      std::size_t expected = l == n ? 2 : 0;
      if (h.betti != expected || !h.torsion.empty()) out.fail(at("K2", n, l));
    }
  }
  return out;
}

Outcome tor_matches_homology() {
  Outcome out;
  std::size_t nonzero = 0;
  for (const auto& [name, graph] : digraph_suite()) {
    auto s = digraph_to_space(graph);
    auto triv = trivial_module(s, 0, 1);
    BarResolution left(s, Side::Left, 4, 4);
    for (const Grade& l : integer_grades(4)) {
      auto chain = magnitude_complex(s, l, 3);
      auto tor = tor_complex(left, triv, l, 4);
      for (int n = 0; n <= 3; ++n) {
        auto h = chain.homology(n);
        if (h.betti || !h.torsion.empty()) ++nonzero;
        if (!(tor.homology(n) == h)) out.fail(at(name, n, l));
      }
    }
  }
  if (out.ok) out.detail = std::to_string(nonzero) + " nonzero bidegrees";
  return out;
}

Outcome ext_matches_cohomology() {
  Outcome out;
  std::size_t nonzero = 0;
  for (const auto& field : {Q, F2})
    for (const auto& [name, graph] : digraph_suite()) {
      auto s = digraph_to_space(graph);
      auto triv = trivial_module(s, 0, 1);
      BarResolution right(s, Side::Right, 4, 4);
      for (const Grade& l : integer_grades(4)) {
        auto ext = ext_complex(right, triv, l, 4, field);
        auto cochain = magnitude_cochain_complex(s, l, 3, field);
        auto chain = magnitude_complex(s, l, 3);
        for (int n = 0; n <= 3; ++n) {
          std::size_t a = ext.cohomology_dim(n), b = cochain.cohomology_dim(n), c = chain.homology(n, field).betti;
          if (a != b || b != c) out.fail(at(name, n, l) + " over " + field.name());
          if (c) ++nonzero;
        }
      }
    }
  if (out.ok) out.detail = std::to_string(nonzero) + " nonzero bidegrees";
  return out;
}

using ClassMap = std::map<std::pair<int, Grade>, std::vector<Cochain>>;

ClassMap cocycle_basis(const std::shared_ptr<const QuasimetricSpace>& s, int n_max, int l_max, const Field& field) {
  ClassMap out;
  for (int n = 0; n <= n_max; ++n)
    for (const Grade& l : integer_grades(l_max)) {
      auto reps = cohomology_classes(s, n, l, field).representatives();
      if (!reps.empty()) out[{n, l}] = reps;
    }
  return out;
}

Outcome yoneda_equals_cup() {
  Outcome out;
  std::size_t products = 0, lifts = 0;
  for (const auto& [name, graph] : digraph_suite()) {
    auto s = std::make_shared<const QuasimetricSpace>(digraph_to_space(graph));
    BarResolution left(*s, Side::Left, 3, 4);
    auto classes = cocycle_basis(s, 3, 4, Q);
    for (const auto& [key, reps] : classes)
      for (const auto& phi : reps)
        for (int k = 0; key.first + k <= 3; ++k) {
          ++lifts;
          if (!lift_commutes(left, phi, k)) out.fail("lift " + std::to_string(k) + " of a class " + at(name, key.first, key.second));
        }
    for (const auto& [lkey, lhs] : classes)
      for (const auto& [rkey, rhs] : classes) {
        if (lkey.first + rkey.first > 3 || lkey.second + rkey.second > 4) continue;
        for (const auto& psi : lhs)
          for (const auto& phi : rhs) {
            ++products;
            if (!(yoneda_product(left, psi, phi) == cup(psi, phi)))
              out.fail(name + ": product of " + at("", lkey.first, lkey.second) + " and " +
                       at("", rkey.first, rkey.second));
          }
      }
  }
  if (out.ok) out.detail = std::to_string(products) + " products, " + std::to_string(lifts) + " lifts";
  return out;
}

Outcome ring_axioms() {
  Outcome out;
  for (const auto& [name, graph] : digraph_suite()) {
    auto s = std::make_shared<const QuasimetricSpace>(digraph_to_space(graph));
    std::vector<Cochain> basis;
    for (int n = 0; n <= 3; ++n)
      for (const Grade& l : integer_grades(4))
        for (const auto& t : enumerate_tuples(*s, n, l, true)) basis.push_back(dual_cochain(s, Q, t.points));

    auto unit = unit_cochain(s, Q);
    for (const auto& phi : basis)
      if (!(cup(unit, phi) == phi) || !(cup(phi, unit) == phi)) out.fail(name + ": unit law");

    std::vector<const Cochain*> small;
    for (const auto& c : basis)
      if (c.degree <= 1 && c.grade <= 2) small.push_back(&c);
    for (const auto* a : small)
      for (const auto* b : small)
        for (const auto* c : small)
          if (!(cup(cup(*a, *b), *c) == cup(*a, cup(*b, *c)))) out.fail(name + ": associativity");

    auto classes = cocycle_basis(s, 3, 4, Q);
    std::vector<Cochain> cocycles;
    for (const auto& [key, reps] : classes) cocycles.insert(cocycles.end(), reps.begin(), reps.end());
    for (const auto& a : cocycles)
      for (const auto& b : cocycles) {
        if (a.degree + b.degree > 3 || a.grade + b.grade > 4) continue;
        if (!is_cocycle(cup(a, b))) out.fail(name + ": cocycle times cocycle");
      }

    for (const auto& c : basis) {
      if (c.degree > 1) continue;
      auto boundary = coboundary(c);
      if (boundary.is_zero()) continue;
      for (const auto& z : cocycles) {
        if (z.degree + boundary.degree > 3 || z.grade + boundary.grade > 4) continue;
        if (!is_coboundary(cup(z, boundary)) || !is_coboundary(cup(boundary, z)))
          out.fail(name + ": cocycle times coboundary");
      }
    }
  }
  return out;
}

Outcome invariants_as_hom() {
  Outcome out;
  std::mt19937_64 rng(77);
  auto suite = digraph_suite();
  for (int i = 0; i < 100; ++i) {
    const auto& [name, graph] = suite[i % suite.size()];
    auto m = random_module(rng, digraph_to_space(graph), 3);
    auto inv = invariants(m);
    for (const auto& row : inv)
      if (hom_from_trivial(m, row.grade) != row.rank)
        out.fail(name + " module #" + std::to_string(i) + " at grade " + row.grade.get_str());
    if (hom_from_trivial(m, 7) != 0) out.fail(name + " module #" + std::to_string(i) + " at an empty grade");
  }
  return out;
}

Outcome presentations() {
  Outcome out;
  for (const auto& [name, graph] : digraph_suite()) {
    auto report = bound_quiver_dimensions(graph, 4);
    if (!report.dimensions_match()) out.fail(name + ": graded dimensions");
    if (!report.relations_in_square || !report.power_in_relations) out.fail(name + ": admissibility");
  }
  return out;
}

Outcome nilpotency() {
  Outcome out;
  for (const auto& [name, graph] : digraph_suite()) {
    DistanceAlgebra alg(digraph_to_space(graph));
    auto powers = radical_powers(alg);
    if (nilpotency_index(alg) > graph.size() ||
        (powers.size() >= graph.size() && !powers[graph.size() - 1].empty()))
      out.fail(name);
  }
  return out;
}

Outcome exactness() {
  Outcome out;
  for (const auto& [name, graph] : digraph_suite()) {
    auto s = digraph_to_space(graph);
    for (Side side : {Side::Left, Side::Right}) {
      BarResolution res(s, side, 4, 4);
      if (!res.is_complex() || !res.is_exact()) out.fail(name + (side == Side::Left ? " (left)" : " (right)"));
    }
  }
  return out;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 complex validity", complex_validity},
      {"2 K2 ladder", k2_ladder},
      {"3 Tor equals magnitude homology", tor_matches_homology},
      {"4 Ext, cochain and homology dimensions agree", ext_matches_cohomology},
      {"5 Yoneda product equals cup", yoneda_equals_cup},
      {"6 ring axioms", ring_axioms},
      {"7 invariants as morphisms from the trivial module", invariants_as_hom},
      {"8 bound-quiver presentation", presentations},
      {"9 nilpotency", nilpotency},
      {"10 resolution exactness", exactness},
  };
  int failures = 0;
  for (const auto& [label, check] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("error: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s AC%s (%.1fs)%s%s\n", o.ok ? "PASS" : "FAIL", label, secs, o.detail.empty() ? "" : ": ",
                o.detail.c_str());
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
