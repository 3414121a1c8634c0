#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "magnitude/algebra.hpp"
#include "magnitude/chain.hpp"
#include "magnitude/linalg.hpp"
#include "magnitude/space.hpp"

namespace magnitude {

enum class Side { Left, Right };

/// A face of a resolution basis tuple: the tuple left after a grade-preserving
/// deletion, with its sign.
struct Face {
  std::vector<PointId> points;
  int sign;
};

/// The bar resolution P_• → S, truncated at degree n_max and total grade l_max.
///
/// Right side: P_n has basis (x_0, ..., x_n, y), a free right σX-module on the
/// generators (x_0, ..., x_n, x_n), with ∂ = Σ_{i=0}^{n} (-1)^i d_i deleting x_i.
/// Left side: P_n has basis (y, x_0, ..., x_n), a free left σX-module on the
/// generators (x_0, x_0, ..., x_n), with ∂ = Σ_{i=0}^{n} (-1)^i d_i deleting x_i.
/// A deletion counts only if it keeps the total grade.
class BarResolution {
 public:
  BarResolution(QuasimetricSpace space, Side side, int n_max, Grade l_max);

  const QuasimetricSpace& space() const noexcept { return space_; }
  Side side() const noexcept { return side_; }
  int n_max() const noexcept { return n_max_; }
  const Grade& l_max() const noexcept { return l_max_; }

  /// (n+2)-tuples with finite consecutive distances and total grade ≤ l_max, lexicographic.
  const std::vector<Tuple>& basis(int n) const;
  std::optional<std::size_t> index_of(int n, const std::vector<PointId>& points) const;
  /// Indices into basis(n) of the tuples of total grade `grade`.
  const std::vector<std::size_t>& indices_at(int n, const Grade& grade) const;
  /// Total grades present in P_0, increasing.
  std::vector<Grade> grades() const;

  /// ∂ of a single basis tuple of P_n, n ≥ 1.
  std::vector<Face> faces(int n, const std::vector<PointId>& points) const;
  /// ∂_n : P_n → P_{n-1}, for 1 ≤ n ≤ n_max.
  const SparseIntMatrix& differential(int n) const;
  /// ∂_n restricted to total grade `grade`.
  SparseIntMatrix differential_block(int n, const Grade& grade) const;
  /// ε : P_0 → S, rows indexed by points: (x, x) ↦ e_x, everything else ↦ 0.
  SparseIntMatrix augmentation() const;

  bool is_generator(const std::vector<PointId>& points) const;
  /// Indices into basis(n) of the free generators.
  std::vector<std::size_t> generators(int n) const;
  /// Splits a basis tuple into its generator and the pair acting on it:
  /// right (x_0..x_n, y) = (x_0..x_n, x_n)·(x_n, y), left (y, x_0..x_n) = (y, x_0)·(x_0, x_0..x_n).
  std::pair<std::vector<PointId>, Pair> decompose(const std::vector<PointId>& points) const;
  /// Module action of a basis pair on a basis tuple, nullopt when the product is zero.
  /// The result may exceed l_max.
  std::optional<std::vector<PointId>> act(const std::vector<PointId>& points, const Pair& pair) const;

  bool is_complex() const;
  /// Homology of the grade block at degree n, 0 ≤ n < n_max (degree 0 before augmentation).
  HomologySummary homology(int n, const Grade& grade) const;
  /// H_0 ≅ S through ε, and H_n = 0 for 1 ≤ n < n_max, in every grade.
  bool is_exact() const;

 private:
  bool keeps_grade(const std::vector<PointId>& points, std::size_t position) const;

  QuasimetricSpace space_;
  Side side_;
  int n_max_;
  Grade l_max_;
  std::vector<std::vector<Tuple>> bases_;
  std::vector<std::map<Grade, std::vector<std::size_t>>> by_grade_;
  std::vector<SparseIntMatrix> differentials_;
};

}  // namespace magnitude
