#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "magnitude/chain.hpp"
#include "magnitude/field.hpp"
#include "magnitude/linalg.hpp"
#include "magnitude/resolution.hpp"
#include "magnitude/space.hpp"

namespace magnitude {

/// Element of MC^{n,ℓ}: finitely supported function on normalized (n+1)-tuples
/// of grade ℓ, with values in `field`.
struct Cochain {
  std::shared_ptr<const QuasimetricSpace> space;
  Field field = Field::rationals();
  int degree = 0;
  Grade grade = 0;
  std::map<std::vector<PointId>, Rational> values;

  Rational at(const std::vector<PointId>& tuple) const;
  /// Adds `value` at `tuple`, checking the support invariant.
  void add(const std::vector<PointId>& tuple, const Rational& value);
  bool is_zero() const { return values.empty(); }

  friend bool operator==(const Cochain& a, const Cochain& b);
};

Cochain zero_cochain(std::shared_ptr<const QuasimetricSpace> space, const Field& field, int degree, const Grade& grade);
/// The dual of a single normalized tuple.
Cochain dual_cochain(std::shared_ptr<const QuasimetricSpace> space, const Field& field,
                     const std::vector<PointId>& tuple);
/// u ∈ MC^{0,0} with u(x) = 1 for every point.
Cochain unit_cochain(std::shared_ptr<const QuasimetricSpace> space, const Field& field);

/// (ψ·φ)(x_0..x_{n+m}) = ψ(x_0..x_m) φ(x_m..x_{n+m}), ψ of degree m in front.
/// Throws SpaceMismatch when the spaces differ, InvalidField when the fields do.
Cochain cup(const Cochain& psi, const Cochain& phi);
Cochain coboundary(const Cochain& phi);
bool is_cocycle(const Cochain& phi);
/// Rank test against the image of δ_{n-1}.
bool is_coboundary(const Cochain& phi);

/// Basis of MH^{n,ℓ} by cocycle representatives. Representatives are the
/// kernel vectors of δ_n (reduced echelon order) that are independent modulo
/// the coboundaries, taken greedily.
class CohomologyClassSet {
 public:
  int degree() const noexcept { return degree_; }
  const Grade& grade() const noexcept { return grade_; }
  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return representatives_.size(); }
  const std::vector<Cochain>& representatives() const noexcept { return representatives_; }

  /// Coordinates of the class of `cocycle` in the representative basis.
  /// Throws NotACocycle if it is not a cocycle of this bidegree.
  std::vector<Rational> coordinates(const Cochain& cocycle) const;

  friend CohomologyClassSet cohomology_classes(std::shared_ptr<const QuasimetricSpace> space, int n,
                                               const Grade& grade, const Field& field);

 private:
  CohomologyClassSet(Field field) : field_(field), echelon_(std::make_shared<EchelonBasis>(field)) {}
  SparseVec to_vector(const Cochain& c) const;

  int degree_ = 0;
  Grade grade_ = 0;
  Field field_;
  std::vector<Cochain> representatives_;
  std::vector<Tuple> basis_;
  std::shared_ptr<EchelonBasis> echelon_;
  std::vector<std::size_t> insertion_index_;
};

CohomologyClassSet cohomology_classes(std::shared_ptr<const QuasimetricSpace> space, int n, const Grade& grade,
                                      const Field& field);
CohomologyClassSet cohomology_classes(const QuasimetricSpace& space, int n, const Grade& grade, const Field& field);

/// φ̂_k : P^left_{n+k} → P^left_k, (y, x_0..x_{n+k}) ↦ (y, x_0..x_k)·φ(x_k..x_{n+k}),
/// as a matrix in the resolution bases (rows basis(k), columns basis(n+k)).
/// Throws ResolutionTooShort if n+k exceeds the resolution.
SparseRatMatrix yoneda_lift(const BarResolution& left, const Cochain& phi, int k);
/// ∂_k φ̂_k = φ̂_{k-1} ∂_{n+k} for k ≥ 1, and ε φ̂_0 = φ̂ for k = 0, as exact matrix identities.
bool lift_commutes(const BarResolution& left, const Cochain& phi, int k);
/// ψ̂ : P^left_m → S, (y, x_0..x_m) ↦ [y = x_0] ψ(x_0..x_m) e_{x_0}; rows indexed by points.
SparseRatMatrix cocycle_to_map(const BarResolution& left, const Cochain& psi);
/// ψ̂ ∘ φ̂_m read back as a cochain of bidegree (n+m, ℓ+s).
/// Throws NotACocycle or ResolutionTooShort.
Cochain yoneda_product(const BarResolution& left, const Cochain& psi, const Cochain& phi);

struct RingProduct {
  int lhs_degree;
  Grade lhs_grade;
  std::size_t lhs_index;
  int rhs_degree;
  Grade rhs_grade;
  std::size_t rhs_index;
  /// (coefficient, index of target class), nonzero coefficients only.
  std::vector<std::pair<Rational, std::size_t>> result;
};

struct RingTable {
  Field field = Field::rationals();
  /// Nonzero bidegrees only, keyed by (n, ℓ).
  std::map<std::pair<int, Grade>, CohomologyClassSet> classes;
  std::vector<RingProduct> products;
};

/// Structure constants of MH^{*,*} for n ≤ n_max and attainable ℓ ≤ l_max, with
/// the class of `lhs` placed in front.
RingTable ring_table(const QuasimetricSpace& space, int n_max, const Grade& l_max, const Field& field);

}  // namespace magnitude
