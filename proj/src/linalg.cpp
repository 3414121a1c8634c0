#include "magnitude/linalg.hpp"

#include <algorithm>
#include <set>

namespace magnitude {

SparseRatMatrix to_rational(const SparseIntMatrix& m) {
  SparseRatMatrix out(m.rows(), m.cols());
  for (const auto& [key, value] : m.entries()) out.set(key.first, key.second, Rational(value));
  return out;
}

SparseRatMatrix reduce_into(const SparseRatMatrix& m, const Field& field) {
  SparseRatMatrix out(m.rows(), m.cols());
  for (const auto& [key, value] : m.entries()) out.set(key.first, key.second, field.reduce(value));
  return out;
}

SparseRatMatrix reduce_into(const SparseIntMatrix& m, const Field& field) {
  return reduce_into(to_rational(m), field);
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw Error(ErrorCode::ShapeMismatch, "matrix data does not match its shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

SparseIntMatrix IntMatrix::to_sparse() const {
  SparseIntMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, (*this)(r, c));
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& v = a(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += v * b(k, j);
    }
  return out;
}

namespace {

// Row-major sparse working copy with column occupancy, for unimodular elimination.
class EliminationMatrix {
 public:
  explicit EliminationMatrix(const SparseIntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    for (const auto& [key, value] : m.entries()) {
      rows_[key.first].emplace(key.second, value);
      cols_[key.second].insert(key.first);
    }
  }

  // Smallest |entry|, ties broken by Markowitz fill estimate.
  std::optional<std::pair<std::size_t, std::size_t>> choose_pivot() const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    std::size_t best_fill = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (const auto& [c, value] : rows_[r]) {
        Integer a = abs(value);
        std::size_t fill = (rows_[r].size() - 1) * (cols_[c].size() - 1);
        if (!best || a < best_abs || (a == best_abs && fill < best_fill)) {
          best = {r, c};
          best_abs = a;
          best_fill = fill;
          if (best_abs == 1 && best_fill == 0) return best;
        }
      }
    }
    return best;
  }

  const Integer& at(std::size_t r, std::size_t c) const { return rows_[r].at(c); }

  // row_target -= q * row_source
  void row_axpy(std::size_t target, std::size_t source, const Integer& q) {
    for (const auto& [c, value] : rows_[source]) update(target, c, -q * value);
  }

  // col_target -= q * col_source
  void col_axpy(std::size_t target, std::size_t source, const Integer& q) {
    std::vector<std::pair<std::size_t, Integer>> column;
    for (std::size_t r : cols_[source]) column.emplace_back(r, rows_[r].at(source));
    for (const auto& [r, value] : column) update(r, target, -q * value);
  }

  std::vector<std::size_t> column_rows(std::size_t c) const { return {cols_[c].begin(), cols_[c].end()}; }
  std::vector<std::size_t> row_cols(std::size_t r) const {
    std::vector<std::size_t> out;
    for (const auto& entry : rows_[r]) out.push_back(entry.first);
    return out;
  }

  void remove(std::size_t r, std::size_t c) {
    for (const auto& entry : rows_[r]) cols_[entry.first].erase(r);
    rows_[r].clear();
    for (std::size_t row : cols_[c]) rows_[row].erase(c);
    cols_[c].clear();
  }

 private:
  void update(std::size_t r, std::size_t c, const Integer& delta) {
    if (delta == 0) return;
    auto [it, inserted] = rows_[r].try_emplace(c, delta);
    if (inserted) {
      cols_[c].insert(r);
      return;
    }
    it->second += delta;
    if (it->second == 0) {
      rows_[r].erase(it);
      cols_[c].erase(r);
    }
  }

  std::vector<std::map<std::size_t, Integer>> rows_;
  std::vector<std::set<std::size_t>> cols_;
};

}  // namespace

std::vector<Integer> normalize_invariant_factors(std::vector<Integer> factors) {
  for (auto& f : factors) f = abs(f);
  std::erase_if(factors, [](const Integer& f) { return f == 0; });
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      Integer g = gcd(factors[i], factors[j]);
      Integer l = factors[i] / g * factors[j];
      factors[i] = g;
      factors[j] = l;
    }
  }
  return factors;
}

std::vector<Integer> snf(const SparseIntMatrix& m) {
  EliminationMatrix work(m);
  std::vector<Integer> diagonal;
  while (auto pivot = work.choose_pivot()) {
    auto [r, c] = *pivot;
    const Integer p = work.at(r, c);
    bool isolated = true;
    for (std::size_t i : work.column_rows(c)) {
      if (i == r) continue;
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), work.at(i, c).get_mpz_t(), p.get_mpz_t());
      if (q != 0) work.row_axpy(i, r, q);
    }
    for (std::size_t j : work.row_cols(r)) {
      if (j == c) continue;
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), work.at(r, j).get_mpz_t(), p.get_mpz_t());
      if (q != 0) work.col_axpy(j, c, q);
    }
    // Remainders smaller than |p| force a new, strictly smaller pivot.
    if (work.column_rows(c).size() != 1 || work.row_cols(r).size() != 1) isolated = false;
    if (!isolated) continue;
    diagonal.push_back(abs(p));
    work.remove(r, c);
  }
  return normalize_invariant_factors(std::move(diagonal));
}

std::size_t rank_over_field(const SparseRatMatrix& m, const Field& field) {
  EchelonBasis basis(field);
  std::vector<SparseVec> rows(m.rows());
  for (const auto& [key, value] : m.entries()) {
    Rational v = field.reduce(value);
    if (v != 0) rows[key.first][key.second] = v;
  }
  for (const auto& row : rows) {
    if (!row.empty()) basis.insert(row);
  }
  return basis.rank();
}

std::size_t rank_over_field(const SparseIntMatrix& m, const Field& field) {
  return rank_over_field(to_rational(m), field);
}

std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix v = IntMatrix::identity(cols);
  auto col_op = [&](std::size_t target, std::size_t source, const Integer& q) {
    // col_target -= q col_source
    for (std::size_t r = 0; r < rows; ++r) a(r, target) -= q * a(r, source);
    for (std::size_t r = 0; r < cols; ++r) v(r, target) -= q * v(r, source);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < cols; ++r) std::swap(v(r, i), v(r, j));
  };
  std::size_t done = 0;
  for (std::size_t r = 0; r < rows && done < cols; ++r) {
    // Euclid across the columns done..cols-1 on row r.
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t c = done; c < cols; ++c) {
        if (a(r, c) != 0 && (!best || abs(a(r, c)) < abs(a(r, *best)))) best = c;
      }
      if (!best) break;
      bool reduced = true;
      for (std::size_t c = done; c < cols; ++c) {
        if (c == *best || a(r, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(r, c).get_mpz_t(), a(r, *best).get_mpz_t());
        col_op(c, *best, q);
        if (a(r, c) != 0) reduced = false;
      }
      if (reduced) {
        col_swap(done, *best);
        ++done;
        break;
      }
    }
  }
  std::vector<std::vector<Integer>> kernel;
  for (std::size_t c = done; c < cols; ++c) {
    std::vector<Integer> vec(cols);
    for (std::size_t r = 0; r < cols; ++r) vec[r] = v(r, c);
    kernel.push_back(std::move(vec));
  }
  return kernel;
}

HomologySummary homology_at(const SparseIntMatrix& boundary_n, const SparseIntMatrix& boundary_n1,
                            std::size_t dim_n) {
  if (boundary_n.cols() != dim_n || boundary_n1.rows() != dim_n) {
    throw Error(ErrorCode::ShapeMismatch, "boundary shapes do not match the chain group dimension");
  }
  if (!(boundary_n * boundary_n1).is_zero()) {
    throw Error(ErrorCode::NotAComplex, "consecutive boundaries do not compose to zero");
  }
  HomologySummary out;
  std::size_t rank_n = snf(boundary_n).size();
  std::vector<Integer> factors = snf(boundary_n1);
  out.betti = dim_n - rank_n - factors.size();
  for (const auto& f : factors) {
    if (f > 1) out.torsion.push_back(f);
  }
  return out;
}

HomologySummary homology_over_field(const SparseIntMatrix& boundary_n, const SparseIntMatrix& boundary_n1,
                                    std::size_t dim_n, const Field& field) {
  if (boundary_n.cols() != dim_n || boundary_n1.rows() != dim_n) {
    throw Error(ErrorCode::ShapeMismatch, "boundary shapes do not match the chain group dimension");
  }
  if (!reduce_into(boundary_n * boundary_n1, field).is_zero()) {
    throw Error(ErrorCode::NotAComplex, "consecutive boundaries do not compose to zero");
  }
  HomologySummary out;
  out.betti = dim_n - rank_over_field(boundary_n, field) - rank_over_field(boundary_n1, field);
  return out;
}

std::pair<SparseVec, SparseVec> EchelonBasis::reduce(const SparseVec& v) const {
  SparseVec residual;
  for (const auto& [k, value] : v) {
    Rational r = field_.reduce(value);
    if (r != 0) residual[k] = r;
  }
  SparseVec combo;
  auto axpy = [&](SparseVec& target, const SparseVec& source, const Rational& q) {
    for (const auto& [k, value] : source) {
      Rational next = field_.sub(target.count(k) ? target[k] : Rational(0), field_.mul(q, value));
      if (next == 0) {
        target.erase(k);
      } else {
        target[k] = next;
      }
    }
  };
  auto it = residual.begin();
  while (it != residual.end()) {
    auto pivot = pivots_.find(it->first);
    if (pivot == pivots_.end()) {
      ++it;
      continue;
    }
    std::size_t key = it->first;
    Rational q = it->second;
    axpy(residual, pivot->second.vec, q);
    // combo tracks v - residual
    axpy(combo, pivot->second.combo, field_.neg(q));
    it = residual.upper_bound(key);
  }
  return {residual, combo};
}

bool EchelonBasis::insert(const SparseVec& v) {
  auto [residual, combo] = reduce(v);
  std::size_t index = inserted_++;
  if (residual.empty()) return false;
  // residual = e_index - combo (in terms of inserted vectors)
  SparseVec row_combo;
  for (const auto& [k, value] : combo) row_combo[k] = field_.neg(value);
  row_combo[index] = Rational(1);
  Rational lead_inv = field_.inv(residual.begin()->second);
  for (auto& [k, value] : residual) value = field_.mul(value, lead_inv);
  for (auto& [k, value] : row_combo) value = field_.mul(value, lead_inv);
  std::erase_if(row_combo, [](const auto& kv) { return kv.second == 0; });
  std::size_t lead = residual.begin()->first;
  pivots_.emplace(lead, Row{std::move(residual), std::move(row_combo)});
  return true;
}

bool EchelonBasis::contains(const SparseVec& v) const {
  return reduce(v).first.empty();
}

std::optional<SparseVec> EchelonBasis::coordinates(const SparseVec& v) const {
  auto [residual, combo] = reduce(v);
  if (!residual.empty()) return std::nullopt;
  return combo;
}

std::vector<SparseVec> kernel_basis(const SparseRatMatrix& m, const Field& field) {
  // Reduced row echelon form, built from an echelon basis of the rows.
  std::vector<SparseVec> rows(m.rows());
  for (const auto& [key, value] : m.entries()) {
    Rational v = field.reduce(value);
    if (v != 0) rows[key.first][key.second] = v;
  }
  std::map<std::size_t, SparseVec> pivot_rows;  // lead column -> row with lead 1
  for (auto row : rows) {
    for (const auto& [lead, prow] : pivot_rows) {
      auto it = row.find(lead);
      if (it == row.end()) continue;
      Rational q = it->second;
      for (const auto& [k, value] : prow) {
        Rational next = field.sub(row.count(k) ? row[k] : Rational(0), field.mul(q, value));
        if (next == 0) {
          row.erase(k);
        } else {
          row[k] = next;
        }
      }
    }
    if (row.empty()) continue;
    Rational inv = field.inv(row.begin()->second);
    for (auto& [k, value] : row) value = field.mul(value, inv);
    std::size_t lead = row.begin()->first;
    // Clear the new lead column from existing rows.
    for (auto& [other_lead, prow] : pivot_rows) {
      auto it = prow.find(lead);
      if (it == prow.end()) continue;
      Rational q = it->second;
      for (const auto& [k, value] : row) {
        Rational next = field.sub(prow.count(k) ? prow[k] : Rational(0), field.mul(q, value));
        if (next == 0) {
          prow.erase(k);
        } else {
          prow[k] = next;
        }
      }
    }
    pivot_rows.emplace(lead, std::move(row));
  }
  std::vector<SparseVec> kernel;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (pivot_rows.count(free)) continue;
    SparseVec vec;
    vec[free] = Rational(1);
    for (const auto& [lead, prow] : pivot_rows) {
      auto it = prow.find(free);
      if (it != prow.end()) vec[lead] = field.neg(it->second);
    }
    kernel.push_back(std::move(vec));
  }
  return kernel;
}

SparseVec apply(const SparseRatMatrix& m, const SparseVec& v, const Field& field) {
  SparseVec out;
  for (const auto& [key, value] : m.entries()) {
    auto it = v.find(key.second);
    if (it == v.end()) continue;
    Rational next = field.add(out.count(key.first) ? out[key.first] : Rational(0), field.mul(value, it->second));
    if (next == 0) {
      out.erase(key.first);
    } else {
      out[key.first] = next;
    }
  }
  return out;
}

}  // namespace magnitude
