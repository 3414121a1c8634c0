#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "magnitude/error.hpp"
#include "magnitude/field.hpp"

namespace magnitude {

/// Sparse matrix keyed by (row, col). Zero entries are never stored.
template <class T>
class SparseMatrix {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }
  const std::map<Key, T>& entries() const noexcept { return entries_; }

  void add(std::size_t r, std::size_t c, const T& value) {
    check(r, c);
    if (value == 0) return;
    auto [it, inserted] = entries_.try_emplace(Key{r, c}, value);
    if (!inserted) {
      it->second += value;
      if (it->second == 0) entries_.erase(it);
    }
  }

  void set(std::size_t r, std::size_t c, const T& value) {
    check(r, c);
    if (value == 0) {
      entries_.erase(Key{r, c});
    } else {
      entries_[Key{r, c}] = value;
    }
  }

  T at(std::size_t r, std::size_t c) const {
    auto it = entries_.find(Key{r, c});
    return it == entries_.end() ? T(0) : it->second;
  }

  SparseMatrix transpose() const {
    SparseMatrix out(cols_, rows_);
    for (const auto& [key, value] : entries_) out.entries_.emplace(Key{key.second, key.first}, value);
    return out;
  }

  /// Restriction to the given rows and columns, in the given order.
  SparseMatrix submatrix(const std::vector<std::size_t>& row_ids, const std::vector<std::size_t>& col_ids) const {
    std::map<std::size_t, std::size_t> row_pos, col_pos;
    for (std::size_t i = 0; i < row_ids.size(); ++i) row_pos[row_ids[i]] = i;
    for (std::size_t j = 0; j < col_ids.size(); ++j) col_pos[col_ids[j]] = j;
    SparseMatrix out(row_ids.size(), col_ids.size());
    for (const auto& [key, value] : entries_) {
      auto r = row_pos.find(key.first);
      if (r == row_pos.end()) continue;
      auto c = col_pos.find(key.second);
      if (c == col_pos.end()) continue;
      out.entries_.emplace(Key{r->second, c->second}, value);
    }
    return out;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw Error(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
    }
    SparseMatrix out(a.rows_, b.cols_);
    for (const auto& [key, value] : a.entries_) {
      auto it = b.entries_.lower_bound(Key{key.second, 0});
      for (; it != b.entries_.end() && it->first.first == key.second; ++it) {
        out.add(key.first, it->first.second, value * it->second);
      }
    }
    return out;
  }

  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw Error(ErrorCode::ShapeMismatch, "matrix difference shape mismatch");
    }
    SparseMatrix out = a;
    for (const auto& [key, value] : b.entries_) out.add(key.first, key.second, -value);
    return out;
  }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw Error(ErrorCode::ShapeMismatch, "matrix index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Key, T> entries_;
};

using SparseIntMatrix = SparseMatrix<Integer>;
using SparseRatMatrix = SparseMatrix<Rational>;

SparseRatMatrix to_rational(const SparseIntMatrix& m);
/// Entry-wise image in `field` (integers reduced mod p over F_p).
SparseRatMatrix reduce_into(const SparseRatMatrix& m, const Field& field);
SparseRatMatrix reduce_into(const SparseIntMatrix& m, const Field& field);

/// Small dense integer matrix; used for the action maps of distance modules.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> data);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  IntMatrix transpose() const;
  SparseIntMatrix to_sparse() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Invariant factors d_1 | d_2 | ... | d_r of the Smith normal form (all > 0).
std::vector<Integer> snf(const SparseIntMatrix& m);

/// Rewrites the orders of a finite direct sum of cyclic groups as a divisibility chain.
std::vector<Integer> normalize_invariant_factors(std::vector<Integer> factors);

std::size_t rank_over_field(const SparseIntMatrix& m, const Field& field);
std::size_t rank_over_field(const SparseRatMatrix& m, const Field& field);

/// A ℤ-basis of {v ∈ ℤ^cols : m v = 0}, via unimodular column reduction.
std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m);

struct HomologySummary {
  int n = 0;
  Rational grade = 0;
  std::size_t betti = 0;
  /// Invariant factors > 1, each dividing the next.
  std::vector<Integer> torsion;

  friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

/// H_n = ker ∂_n / im ∂_{n+1} over ℤ. Throws NotAComplex if ∂_n ∂_{n+1} ≠ 0.
HomologySummary homology_at(const SparseIntMatrix& boundary_n, const SparseIntMatrix& boundary_n1,
                            std::size_t dim_n);
/// Same over a field; torsion is always empty.
HomologySummary homology_over_field(const SparseIntMatrix& boundary_n, const SparseIntMatrix& boundary_n1,
                                    std::size_t dim_n, const Field& field);

using SparseVec = std::map<std::size_t, Rational>;

/// Echelon basis of a subspace of F^n, built one vector at a time. Each stored
/// row remembers its expression in terms of the inserted vectors, so membership
/// tests can return coordinates.
class EchelonBasis {
 public:
  explicit EchelonBasis(Field field) : field_(std::move(field)) {}

  /// Returns true when `v` was independent of the vectors inserted so far.
  bool insert(const SparseVec& v);
  bool contains(const SparseVec& v) const;
  /// Coefficients (indexed by insertion order) expressing `v`, if it lies in the span.
  std::optional<SparseVec> coordinates(const SparseVec& v) const;
  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t inserted() const noexcept { return inserted_; }

 private:
  struct Row {
    SparseVec vec;
    SparseVec combo;
  };
  std::pair<SparseVec, SparseVec> reduce(const SparseVec& v) const;

  Field field_;
  std::map<std::size_t, Row> pivots_;
  std::size_t inserted_ = 0;
};

/// Basis of the null space of `m` over `field` read off the reduced row echelon form,
/// one vector per free column in increasing column order.
std::vector<SparseVec> kernel_basis(const SparseRatMatrix& m, const Field& field);

/// m · v over `field`.
SparseVec apply(const SparseRatMatrix& m, const SparseVec& v, const Field& field);

}  // namespace magnitude
