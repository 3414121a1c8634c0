#include "magnitude/chain.hpp"

#include <algorithm>

#include "magnitude/error.hpp"

namespace magnitude {

namespace {

void extend(const QuasimetricSpace& space, std::vector<PointId>& prefix, const Grade& so_far, int remaining,
            const Grade& target, bool normalized, std::vector<Tuple>& out) {
  if (remaining == 0) {
    if (so_far == target) out.push_back({prefix, so_far});
    return;
  }
  const PointId last = prefix.back();
  for (PointId next = 0; next < space.size(); ++next) {
    if (normalized && next == last) continue;
    const ExtDist& d = space.dist(last, next);
    if (d.is_infinite()) continue;
    Grade grade = so_far + d.value();
    if (grade > target) continue;
    prefix.push_back(next);
    extend(space, prefix, grade, remaining - 1, target, normalized, out);
    prefix.pop_back();
  }
}

std::size_t index_in(const std::vector<ChainGenerator>& basis, const ChainGenerator& g) {
  auto it = std::lower_bound(basis.begin(), basis.end(), g);
  if (it == basis.end() || !(*it == g)) {
    throw Error(ErrorCode::InvalidArgument, "face lands outside the generator basis");
  }
  return static_cast<std::size_t>(it - basis.begin());
}

Tuple delete_point(const QuasimetricSpace& space, const Tuple& t, std::size_t i) {
  Tuple out;
  out.points = t.points;
  out.points.erase(out.points.begin() + static_cast<std::ptrdiff_t>(i));
  out.grade = tuple_length(space, out.points).value();
  return out;
}

bool degree_is_empty(const QuasimetricSpace& space, int n, const Grade& grade) {
  if (n == 0) return false;
  Rational delta;
  try {
    delta = min_positive_distance(space);
  } catch (const Error&) {
    return true;
  }
  return delta * n > grade;
}

}  // namespace

ExtDist tuple_length(const QuasimetricSpace& space, const std::vector<PointId>& points) {
  ExtDist total(0);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) total = total + space.dist(points[i], points[i + 1]);
  return total;
}

std::vector<Tuple> enumerate_tuples_from(const QuasimetricSpace& space, PointId start, int n, const Grade& grade,
                                         bool normalized) {
  std::vector<Tuple> out;
  if (n < 0 || grade < 0) return out;
  if (normalized && degree_is_empty(space, n, grade)) return out;
  std::vector<PointId> prefix{start};
  extend(space, prefix, Grade(0), n, grade, normalized, out);
  return out;
}

std::vector<Tuple> enumerate_tuples(const QuasimetricSpace& space, int n, const Grade& grade, bool normalized) {
  std::vector<Tuple> out;
  for (PointId x = 0; x < space.size(); ++x) {
    auto part = enumerate_tuples_from(space, x, n, grade, normalized);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

HomologySummary BasedComplex::homology(int n) const {
  if (n < 0 || n > n_max) throw Error(ErrorCode::InvalidArgument, "degree outside the computed range");
  HomologySummary out = homology_at(boundaries[n], boundaries[n + 1], dim(n));
  out.n = n;
  out.grade = grade;
  return out;
}

HomologySummary BasedComplex::homology(int n, const Field& field) const {
  if (n < 0 || n > n_max) throw Error(ErrorCode::InvalidArgument, "degree outside the computed range");
  HomologySummary out = homology_over_field(boundaries[n], boundaries[n + 1], dim(n), field);
  out.n = n;
  out.grade = grade;
  return out;
}

bool BasedComplex::is_complex() const {
  for (std::size_t n = 1; n < boundaries.size(); ++n) {
    if (!(boundaries[n - 1] * boundaries[n]).is_zero()) return false;
  }
  return true;
}

std::size_t CochainComplex::cohomology_dim(int n) const {
  if (n < 0 || n > n_max) throw Error(ErrorCode::InvalidArgument, "degree outside the computed range");
  std::size_t rank_out = rank_over_field(coboundaries[n], field);
  std::size_t rank_in = n == 0 ? 0 : rank_over_field(coboundaries[n - 1], field);
  return dim(n) - rank_out - rank_in;
}

bool CochainComplex::is_complex() const {
  for (std::size_t n = 1; n < coboundaries.size(); ++n) {
    if (!reduce_into(coboundaries[n] * coboundaries[n - 1], field).is_zero()) return false;
  }
  return true;
}

BasedComplex magnitude_complex(const QuasimetricSpace& space, const Grade& grade, int n_max) {
  if (grade < 0 || n_max < 0) throw Error(ErrorCode::InvalidArgument, "grade and n_max must be nonnegative");
  BasedComplex cx;
  cx.grade = grade;
  cx.n_max = n_max;
  for (int n = 0; n <= n_max + 1; ++n) {
    std::vector<ChainGenerator> basis;
    for (auto& t : enumerate_tuples(space, n, grade, true)) basis.push_back({std::move(t), 0});
    cx.bases.push_back(std::move(basis));
  }
  cx.boundaries.emplace_back(0, cx.dim(0));
  for (int n = 1; n <= n_max + 1; ++n) {
    SparseIntMatrix boundary(cx.dim(n - 1), cx.dim(n));
    const auto& source = cx.bases[n];
    for (std::size_t col = 0; col < source.size(); ++col) {
      const auto& pts = source[col].tuple.points;
      for (int i = 1; i < n; ++i) {
        if (!between(space, pts[i - 1], pts[i], pts[i + 1])) continue;
        ChainGenerator face{delete_point(space, source[col].tuple, static_cast<std::size_t>(i)), 0};
        boundary.add(index_in(cx.bases[n - 1], face), col, Integer(i % 2 == 0 ? 1 : -1));
      }
    }
    cx.boundaries.push_back(std::move(boundary));
  }
  return cx;
}

BasedComplex magnitude_complex_with_coefficients(const QuasimetricSpace& space, const DistanceModule& module,
                                                 const Grade& grade, int n_max) {
  if (!(module.space() == space)) throw Error(ErrorCode::SpaceMismatch, "module lives over a different space");
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "n_max must be nonnegative");
  BasedComplex cx;
  cx.grade = grade;
  cx.n_max = n_max;
  for (int n = 0; n <= n_max + 1; ++n) {
    std::vector<ChainGenerator> basis;
    for (PointId x = 0; x < space.size(); ++x) {
      for (const auto& [h, rank] : module.components(x)) {
        if (rank == 0) continue;
        for (auto& t : enumerate_tuples_from(space, x, n, grade - h, true)) {
          for (std::size_t i = 0; i < rank; ++i) basis.push_back({t, i});
        }
      }
    }
    std::sort(basis.begin(), basis.end());
    cx.bases.push_back(std::move(basis));
  }
  cx.boundaries.emplace_back(0, cx.dim(0));
  for (int n = 1; n <= n_max + 1; ++n) {
    SparseIntMatrix boundary(cx.dim(n - 1), cx.dim(n));
    const auto& source = cx.bases[n];
    for (std::size_t col = 0; col < source.size(); ++col) {
      const Tuple& t = source[col].tuple;
      const auto& pts = t.points;
      // d_0(m ⊗ t) = (m · x_1) ⊗ (x_1, ..., x_n)
      const Grade h = grade - t.grade;
      IntMatrix act = module.action(pts[0], pts[1], h);
      Tuple tail = delete_point(space, t, 0);
      for (std::size_t k = 0; k < act.rows(); ++k) {
        const Integer& c = act(k, source[col].coefficient);
        if (c == 0) continue;
        boundary.add(index_in(cx.bases[n - 1], {tail, k}), col, c);
      }
      for (int i = 1; i < n; ++i) {
        if (!between(space, pts[i - 1], pts[i], pts[i + 1])) continue;
        ChainGenerator face{delete_point(space, t, static_cast<std::size_t>(i)), source[col].coefficient};
        boundary.add(index_in(cx.bases[n - 1], face), col, Integer(i % 2 == 0 ? 1 : -1));
      }
      // d_n deletes x_n only when x_{n-1} = x_n, which never holds on normalized tuples.
    }
    cx.boundaries.push_back(std::move(boundary));
  }
  return cx;
}

CochainComplex magnitude_cochain_complex(const QuasimetricSpace& space, const Grade& grade, int n_max,
                                         const Field& field) {
  BasedComplex chain = magnitude_complex(space, grade, n_max);
  CochainComplex cx;
  cx.grade = grade;
  cx.n_max = n_max;
  cx.field = field;
  cx.bases = std::move(chain.bases);
  for (int n = 0; n <= n_max; ++n) {
    cx.coboundaries.push_back(reduce_into(chain.boundaries[n + 1].transpose(), field));
  }
  return cx;
}

}  // namespace magnitude
