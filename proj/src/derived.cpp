#include "magnitude/derived.hpp"

#include <algorithm>
#include <optional>

#include "magnitude/error.hpp"

namespace magnitude {

namespace {

struct GradeRange {
  std::optional<Grade> low;
  std::optional<Grade> high;
};

GradeRange grade_range(const DistanceModule& module) {
  GradeRange r;
  for (PointId x = 0; x < module.space().size(); ++x)
    for (const auto& [g, rank] : module.components(x)) {
      if (rank == 0) continue;
      if (!r.low || g < *r.low) r.low = g;
      if (!r.high || g > *r.high) r.high = g;
    }
  return r;
}

void require_same_space(const BarResolution& res, const DistanceModule& module) {
  if (!(res.space() == module.space())) {
    throw Error(ErrorCode::SpaceMismatch, "module and resolution live over different spaces");
  }
}

std::size_t find_generator(const std::vector<ChainGenerator>& basis, const ChainGenerator& g) {
  auto it = std::lower_bound(basis.begin(), basis.end(), g);
  if (it == basis.end() || !(*it == g)) throw Error(ErrorCode::InvalidArgument, "generator outside the basis");
  return static_cast<std::size_t>(it - basis.begin());
}

Grade zero_floor(const Grade& g) { return g < 0 ? Grade(0) : g; }

}  // namespace

BasedComplex tor_complex(const BarResolution& left, const DistanceModule& module, const Grade& grade, int top) {
  if (left.side() != Side::Left) throw Error(ErrorCode::InvalidArgument, "Tor needs the left resolution");
  require_same_space(left, module);
  if (top < 0 || top > left.n_max()) {
    throw Error(ErrorCode::ResolutionTooShort, "resolution degree too small for the requested Tor");
  }
  GradeRange range = grade_range(module);
  if (range.low && grade - *range.low > left.l_max()) {
    throw Error(ErrorCode::ResolutionTooShort, "resolution grade bound too small for the requested Tor");
  }

  BasedComplex cx;
  cx.grade = grade;
  cx.n_max = top - 1;
  for (int k = 0; k <= top; ++k) {
    std::vector<ChainGenerator> basis;
    const auto& tuples = left.basis(k);
    for (std::size_t i : left.generators(k)) {
      std::vector<PointId> t(tuples[i].points.begin() + 1, tuples[i].points.end());
      std::size_t rank = module.rank(t[0], grade - tuples[i].grade);
      for (std::size_t c = 0; c < rank; ++c) basis.push_back({Tuple{t, tuples[i].grade}, c});
    }
    // Generator tuples are sorted by t, so the basis is already ordered.
    cx.bases.push_back(std::move(basis));
  }
  cx.boundaries.emplace_back(0, cx.dim(0));
  for (int k = 1; k <= top; ++k) {
    SparseIntMatrix d(cx.dim(k - 1), cx.dim(k));
    const auto& source = cx.bases[k];
    for (std::size_t col = 0; col < source.size(); ++col) {
      const Tuple& t = source[col].tuple;
      std::vector<PointId> g{t.points[0]};
      g.insert(g.end(), t.points.begin(), t.points.end());
      const Grade h = grade - t.grade;
      // m ⊗ ∂g: each face is (y, z_0)·g' and m ⊗ (y, z_0)·g' = (m·(y, z_0)) ⊗ g'.
      for (const auto& face : left.faces(k, g)) {
        auto [target, pair] = left.decompose(face.points);
        IntMatrix act = module.action(pair.first, pair.second, h);
        Tuple tail{std::vector<PointId>(target.begin() + 1, target.end()), t.grade - left.space().dist(pair.first, pair.second).value()};
        for (std::size_t r = 0; r < act.rows(); ++r) {
          const Integer& c = act(r, source[col].coefficient);
          if (c == 0) continue;
          d.add(find_generator(cx.bases[k - 1], {tail, r}), col, c * face.sign);
        }
      }
    }
    cx.boundaries.push_back(std::move(d));
  }
  return cx;
}

HomologySummary tor_bidegree(const BarResolution& left, const DistanceModule& module, int n, const Grade& grade) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative homological degree");
  return tor_complex(left, module, grade, n + 1).homology(n);
}

HomologySummary tor_bidegree(const BarResolution& left, const DistanceModule& module, int n, const Grade& grade,
                             const Field& field) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative homological degree");
  return tor_complex(left, module, grade, n + 1).homology(n, field);
}

HomologySummary tor_bidegree(const QuasimetricSpace& space, const DistanceModule& module, int n, const Grade& grade) {
  GradeRange range = grade_range(module);
  Grade bound = range.low ? zero_floor(grade - *range.low) : Grade(0);
  BarResolution left(space, Side::Left, n + 1, bound);
  return tor_bidegree(left, module, n, grade);
}

CochainComplex ext_complex(const BarResolution& right, const DistanceModule& module, const Grade& grade, int top,
                           const Field& field) {
  if (right.side() != Side::Right) throw Error(ErrorCode::InvalidArgument, "Ext needs the right resolution");
  require_same_space(right, module);
  if (top < 1 || top > right.n_max()) {
    throw Error(ErrorCode::ResolutionTooShort, "resolution degree too small for the requested Ext");
  }
  GradeRange range = grade_range(module);
  if (range.high && grade + *range.high > right.l_max()) {
    throw Error(ErrorCode::ResolutionTooShort, "resolution grade bound too small for the requested Ext");
  }

  CochainComplex cx;
  cx.grade = grade;
  cx.n_max = top - 1;
  cx.field = field;
  for (int k = 0; k <= top; ++k) {
    std::vector<ChainGenerator> basis;
    const auto& tuples = right.basis(k);
    for (std::size_t i : right.generators(k)) {
      std::vector<PointId> t(tuples[i].points.begin(), tuples[i].points.end() - 1);
      std::size_t rank = module.rank(t.back(), tuples[i].grade - grade);
      for (std::size_t c = 0; c < rank; ++c) basis.push_back({Tuple{t, tuples[i].grade}, c});
    }
    cx.bases.push_back(std::move(basis));
  }
  for (int k = 0; k < top; ++k) {
    // (δf)(h_t) = f(∂h_t), and f(h_z·(z_k, y)) = f(h_z)·(z_k, y).
    SparseRatMatrix delta(cx.dim(k + 1), cx.dim(k));
    const auto& rows = cx.bases[k + 1];
    for (std::size_t row = 0; row < rows.size(); ++row) {
      const Tuple& t = rows[row].tuple;
      std::vector<PointId> h = t.points;
      h.push_back(t.points.back());
      for (const auto& face : right.faces(k + 1, h)) {
        auto [target, pair] = right.decompose(face.points);
        Tuple z{std::vector<PointId>(target.begin(), target.end() - 1),
                t.grade - right.space().dist(pair.first, pair.second).value()};
        IntMatrix act = module.action(pair.first, pair.second, z.grade - grade);
        for (std::size_t c = 0; c < act.cols(); ++c) {
          const Integer& a = act(rows[row].coefficient, c);
          if (a == 0) continue;
          delta.add(row, find_generator(cx.bases[k], {z, c}), Rational(a * face.sign));
        }
      }
    }
    cx.coboundaries.push_back(reduce_into(delta, field));
  }
  return cx;
}

std::size_t ext_bidegree(const BarResolution& right, const DistanceModule& module, int n, const Grade& grade,
                         const Field& field) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative cohomological degree");
  return ext_complex(right, module, grade, n + 1, field).cohomology_dim(n);
}

std::size_t ext_bidegree(const QuasimetricSpace& space, const DistanceModule& module, int n, const Grade& grade,
                         const Field& field) {
  GradeRange range = grade_range(module);
  Grade bound = range.high ? zero_floor(grade + *range.high) : Grade(0);
  BarResolution right(space, Side::Right, n + 1, bound);
  return ext_bidegree(right, module, n, grade, field);
}

}  // namespace magnitude
