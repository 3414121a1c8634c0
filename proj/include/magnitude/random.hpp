#pragma once

#include <cstddef>
#include <random>

#include "magnitude/distmod.hpp"
#include "magnitude/space.hpp"

namespace magnitude {

/// Off-diagonal distances drawn uniformly from {1/2, 1, 3/2, 2, ∞}, then closed
/// under min-plus composition. Points are labelled p0, p1, ...
QuasimetricSpace random_space(std::mt19937_64& rng, std::size_t points);

/// Each ordered pair of distinct vertices is an arc with the given probability.
Digraph random_digraph(std::mt19937_64& rng, std::size_t vertices, double arc_probability = 0.4);

/// A random valid distance module with component ranks ≤ 2 and grades in [0, max_grade].
///
/// Built as a sum of at most two pieces, each a shifted representable module
/// (possibly divided by the part beyond some point) or a rank-one trivial module.
/// Actions along d(y,z) are scaled by λ^{d(y,z)} for λ ∈ {1, 2, -1} when all
/// distances are integers, and every component gets a random unimodular change
/// of basis at the end.
DistanceModule random_module(std::mt19937_64& rng, const QuasimetricSpace& space, const Grade& max_grade = 3);

}  // namespace magnitude
