#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "magnitude/distmod.hpp"
#include "magnitude/linalg.hpp"
#include "magnitude/space.hpp"

namespace magnitude {

/// A tuple of points (x_0, ..., x_n) together with its length Σ d(x_i, x_{i+1}).
struct Tuple {
  std::vector<PointId> points;
  Grade grade;

  int degree() const { return static_cast<int>(points.size()) - 1; }
  bool operator==(const Tuple& other) const { return points == other.points; }
  auto operator<=>(const Tuple& other) const { return points <=> other.points; }
};

/// Length of a tuple, ∞ if some consecutive distance is infinite.
ExtDist tuple_length(const QuasimetricSpace& space, const std::vector<PointId>& points);

/// All (n+1)-tuples of length exactly `grade` with finite consecutive distances,
/// lexicographically sorted. `normalized` demands x_i ≠ x_{i+1}.
std::vector<Tuple> enumerate_tuples(const QuasimetricSpace& space, int n, const Grade& grade, bool normalized);
/// Same, restricted to tuples that start at `start`.
std::vector<Tuple> enumerate_tuples_from(const QuasimetricSpace& space, PointId start, int n, const Grade& grade,
                                         bool normalized);

/// A generator m_i ⊗ t: `coefficient` indexes the standard basis of
/// M(x_0)_{ℓ - |t|} (always 0 for trivial coefficients).
struct ChainGenerator {
  Tuple tuple;
  std::size_t coefficient = 0;

  bool operator==(const ChainGenerator&) const = default;
  auto operator<=>(const ChainGenerator& other) const {
    if (auto c = tuple <=> other.tuple; c != 0) return c;
    return coefficient <=> other.coefficient;
  }
};

/// Normalized magnitude chain complex in a single grade, degrees 0..n_max+1.
struct BasedComplex {
  Grade grade;
  int n_max = 0;
  std::vector<std::vector<ChainGenerator>> bases;
  /// boundaries[n] : C_n -> C_{n-1}; boundaries[0] is the zero map to the empty module.
  std::vector<SparseIntMatrix> boundaries;

  std::size_t dim(int n) const { return bases.at(static_cast<std::size_t>(n)).size(); }
  int top_degree() const { return static_cast<int>(bases.size()) - 1; }
  /// H_n over ℤ, for 0 ≤ n ≤ n_max.
  HomologySummary homology(int n) const;
  HomologySummary homology(int n, const Field& field) const;
  /// ∂_{n} ∂_{n+1} = 0 for every stored pair.
  bool is_complex() const;
};

/// Normalized magnitude cochain complex MC^{•,ℓ} over a field, degrees 0..n_max+1.
struct CochainComplex {
  Grade grade;
  int n_max = 0;
  Field field = Field::rationals();
  std::vector<std::vector<ChainGenerator>> bases;
  /// coboundaries[n] : C^n -> C^{n+1}, the transpose of ∂_{n+1}; n = 0..n_max.
  std::vector<SparseRatMatrix> coboundaries;

  std::size_t dim(int n) const { return bases.at(static_cast<std::size_t>(n)).size(); }
  /// dim MH^{n,ℓ}, for 0 ≤ n ≤ n_max.
  std::size_t cohomology_dim(int n) const;
  bool is_complex() const;
};

BasedComplex magnitude_complex(const QuasimetricSpace& space, const Grade& grade, int n_max);
BasedComplex magnitude_complex_with_coefficients(const QuasimetricSpace& space, const DistanceModule& module,
                                                 const Grade& grade, int n_max);
CochainComplex magnitude_cochain_complex(const QuasimetricSpace& space, const Grade& grade, int n_max,
                                         const Field& field);

}  // namespace magnitude
