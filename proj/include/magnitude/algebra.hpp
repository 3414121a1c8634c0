#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "magnitude/distmod.hpp"
#include "magnitude/space.hpp"

namespace magnitude {

using Pair = std::pair<PointId, PointId>;

/// Finite integer combination of basis pairs. Zero coefficients are never stored.
struct AlgebraElement {
  std::map<Pair, Integer> terms;

  void add(const Pair& p, const Integer& c);
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
};

/// The distance algebra σX: basis the pairs (x,y) with d(x,y) < ∞, graded by
/// distance, with (x,y)·(y,z) = (x,z) when y lies between x and z and every other
/// product of basis pairs zero.
class DistanceAlgebra {
 public:
  explicit DistanceAlgebra(QuasimetricSpace space);

  const QuasimetricSpace& space() const noexcept { return space_; }
  /// All finite-distance pairs, lexicographic.
  const std::vector<Pair>& basis() const noexcept { return basis_; }
  bool contains(const Pair& p) const;
  Grade degree(const Pair& p) const;

  /// Throws InvalidArgument if d(x,y) = ∞.
  AlgebraElement pair(PointId x, PointId y) const;
  AlgebraElement idempotent(PointId x) const { return pair(x, x); }
  AlgebraElement unit() const;

  std::optional<Pair> multiply(const Pair& p, const Pair& q) const;
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  /// Splits an element by degree.
  std::map<Grade, AlgebraElement> homogeneous_parts(const AlgebraElement& a) const;

  /// (pq)r = p(qr) for every triple of basis pairs.
  bool is_associative() const;

 private:
  QuasimetricSpace space_;
  std::vector<Pair> basis_;
};

DistanceAlgebra build_distance_algebra(const QuasimetricSpace& space);
AlgebraElement algebra_multiply(const DistanceAlgebra& algebra, const AlgebraElement& a, const AlgebraElement& b);

/// Basis pairs spanning (JX)^k, for k = 1, 2, ... until the power vanishes.
/// The last entry is always empty.
std::vector<std::vector<Pair>> radical_powers(const DistanceAlgebra& algebra);
/// Smallest k with (JX)^k = 0.
std::size_t nilpotency_index(const DistanceAlgebra& algebra);

/// S = σX / JX: one copy of ℤ at grade 0 per point. (x,y) acts on S_z by the
/// identity if x = y = z and by zero otherwise, on either side.
class QuotientModuleS {
 public:
  explicit QuotientModuleS(std::size_t points) : points_(points) {}

  std::size_t rank(const Grade& grade) const { return grade == 0 ? points_ : 0; }
  /// e_z · (x,y), as a coefficient of e_z.
  Integer act_right(PointId z, const Pair& p) const { return p.first == z && p.second == z ? 1 : 0; }
  /// (x,y) · e_z, as a coefficient of e_z.
  Integer act_left(const Pair& p, PointId z) const { return act_right(z, p); }
  /// The matching distance module, Triv(ℤ[0]).
  DistanceModule as_distance_module(const QuasimetricSpace& space) const;

 private:
  std::size_t points_;
};

QuotientModuleS quotient_module_S(const DistanceAlgebra& algebra);

}  // namespace magnitude
