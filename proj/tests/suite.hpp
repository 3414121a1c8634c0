#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "magnitude/space.hpp"

namespace magnitude::testing {

struct Named {
  std::string name;
  Digraph graph;
};

inline Digraph make_digraph(std::vector<std::string> vertices,
                            const std::vector<std::pair<std::string, std::string>>& arcs) {
  return Digraph(std::move(vertices), arcs);
}

inline Digraph x2() { return make_digraph({"a", "b"}, {{"a", "b"}}); }
inline Digraph k2() { return make_digraph({"x", "y"}, {{"x", "y"}, {"y", "x"}}); }
inline Digraph diamond() {
  return make_digraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "d"}, {"a", "c"}, {"c", "d"}});
}

inline Digraph cycle(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::pair<std::string, std::string>> arcs;
  for (std::size_t i = 0; i < n; ++i) arcs.emplace_back(v[i], v[(i + 1) % n]);
  return make_digraph(v, arcs);
}

/// The two tournaments on three vertices up to isomorphism: transitive and cyclic.
inline std::vector<Digraph> tournaments3() {
  return {make_digraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}), cycle(3)};
}

inline std::vector<Named> digraph_suite() {
  std::vector<Named> out{{"X2", x2()}, {"K2", k2()}, {"C3", cycle(3)}, {"C4", cycle(4)},
                         {"C5", cycle(5)}, {"diamond", diamond()}};
  auto t = tournaments3();
  out.push_back({"T3-transitive", t[0]});
  out.push_back({"T3-cyclic", t[1]});
  return out;
}

/// Canonical arc mask of a digraph on `n` vertices: the smallest mask over all relabellings.
inline unsigned canonical_mask(std::size_t n, unsigned mask) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  unsigned best = ~0u;
  do {
    unsigned m = 0;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        if (u == v) continue;
        if (mask >> (u * n + v) & 1u) m |= 1u << (perm[u] * n + perm[v]);
      }
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// One representative per isomorphism class of digraphs on `n` vertices.
inline std::vector<Digraph> digraphs_up_to_isomorphism(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v) slots.emplace_back(u, v);
  std::set<unsigned> seen;
  std::vector<Digraph> out;
  for (unsigned bits = 0; bits < (1u << slots.size()); ++bits) {
    unsigned mask = 0;
    std::vector<std::pair<PointId, PointId>> arcs;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (bits >> i & 1u) {
        mask |= 1u << (slots[i].first * n + slots[i].second);
        arcs.push_back(slots[i]);
      }
    if (!seen.insert(canonical_mask(n, mask)).second) continue;
    out.emplace_back(n, arcs);
  }
  return out;
}

}  // namespace magnitude::testing
