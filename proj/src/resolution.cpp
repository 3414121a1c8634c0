#include "magnitude/resolution.hpp"

#include <algorithm>

#include "magnitude/error.hpp"

namespace magnitude {

namespace {

void extend(const QuasimetricSpace& space, std::vector<PointId>& prefix, const Grade& so_far, std::size_t length,
            const Grade& bound, std::vector<Tuple>& out) {
  if (prefix.size() == length) {
    out.push_back({prefix, so_far});
    return;
  }
  const PointId last = prefix.back();
  for (PointId next = 0; next < space.size(); ++next) {
    const ExtDist& d = space.dist(last, next);
    if (d.is_infinite()) continue;
    Grade grade = so_far + d.value();
    if (grade > bound) continue;
    prefix.push_back(next);
    extend(space, prefix, grade, length, bound, out);
    prefix.pop_back();
  }
}

const std::vector<std::size_t> kNoIndices;

}  // namespace

BarResolution::BarResolution(QuasimetricSpace space, Side side, int n_max, Grade l_max)
    : space_(std::move(space)), side_(side), n_max_(n_max), l_max_(std::move(l_max)) {
  if (n_max_ < 0 || l_max_ < 0) throw Error(ErrorCode::InvalidArgument, "n_max and l_max must be nonnegative");
  for (int n = 0; n <= n_max_; ++n) {
    std::vector<Tuple> basis;
    for (PointId x = 0; x < space_.size(); ++x) {
      std::vector<PointId> prefix{x};
      extend(space_, prefix, Grade(0), static_cast<std::size_t>(n) + 2, l_max_, basis);
    }
    std::map<Grade, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < basis.size(); ++i) groups[basis[i].grade].push_back(i);
    bases_.push_back(std::move(basis));
    by_grade_.push_back(std::move(groups));
  }
  differentials_.emplace_back(0, bases_[0].size());
  for (int n = 1; n <= n_max_; ++n) {
    SparseIntMatrix d(bases_[n - 1].size(), bases_[n].size());
    for (std::size_t col = 0; col < bases_[n].size(); ++col) {
      for (const auto& face : faces(n, bases_[n][col].points)) {
        auto row = index_of(n - 1, face.points);
        // Faces keep the grade, so they stay inside the truncation.
        d.add(*row, col, Integer(face.sign));
      }
    }
    differentials_.push_back(std::move(d));
  }
}

const std::vector<Tuple>& BarResolution::basis(int n) const {
  if (n < 0 || n > n_max_) throw Error(ErrorCode::ResolutionTooShort, "degree beyond the computed resolution");
  return bases_[static_cast<std::size_t>(n)];
}

std::optional<std::size_t> BarResolution::index_of(int n, const std::vector<PointId>& points) const {
  const auto& b = basis(n);
  auto it = std::lower_bound(b.begin(), b.end(), points, [](const Tuple& t, const std::vector<PointId>& p) {
    return t.points < p;
  });
  if (it == b.end() || it->points != points) return std::nullopt;
  return static_cast<std::size_t>(it - b.begin());
}

const std::vector<std::size_t>& BarResolution::indices_at(int n, const Grade& grade) const {
  basis(n);
  const auto& groups = by_grade_[static_cast<std::size_t>(n)];
  auto it = groups.find(grade);
  return it == groups.end() ? kNoIndices : it->second;
}

std::vector<Grade> BarResolution::grades() const {
  std::vector<Grade> out;
  for (const auto& [g, ids] : by_grade_[0]) out.push_back(g);
  return out;
}

bool BarResolution::keeps_grade(const std::vector<PointId>& p, std::size_t i) const {
  if (i == 0) return p[0] == p[1];
  if (i + 1 == p.size()) return p[i - 1] == p[i];
  return between(space_, p[i - 1], p[i], p[i + 1]);
}

std::vector<Face> BarResolution::faces(int n, const std::vector<PointId>& points) const {
  if (points.size() != static_cast<std::size_t>(n) + 2) {
    throw Error(ErrorCode::ShapeMismatch, "tuple length does not match the degree");
  }
  std::vector<Face> out;
  const std::size_t offset = side_ == Side::Left ? 1 : 0;
  for (int i = 0; i <= n; ++i) {
    std::size_t position = static_cast<std::size_t>(i) + offset;
    if (!keeps_grade(points, position)) continue;
    std::vector<PointId> face = points;
    face.erase(face.begin() + static_cast<std::ptrdiff_t>(position));
    out.push_back({std::move(face), i % 2 == 0 ? 1 : -1});
  }
  return out;
}

const SparseIntMatrix& BarResolution::differential(int n) const {
  if (n < 1 || n > n_max_) throw Error(ErrorCode::ResolutionTooShort, "differential beyond the computed resolution");
  return differentials_[static_cast<std::size_t>(n)];
}

SparseIntMatrix BarResolution::differential_block(int n, const Grade& grade) const {
  return differential(n).submatrix(indices_at(n - 1, grade), indices_at(n, grade));
}

SparseIntMatrix BarResolution::augmentation() const {
  SparseIntMatrix e(space_.size(), bases_[0].size());
  for (std::size_t col = 0; col < bases_[0].size(); ++col) {
    const auto& p = bases_[0][col].points;
    if (p[0] == p[1]) e.add(p[0], col, Integer(1));
  }
  return e;
}

bool BarResolution::is_generator(const std::vector<PointId>& p) const {
  if (p.size() < 2) return false;
  return side_ == Side::Right ? p[p.size() - 2] == p.back() : p[0] == p[1];
}

std::vector<std::size_t> BarResolution::generators(int n) const {
  std::vector<std::size_t> out;
  const auto& b = basis(n);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (is_generator(b[i].points)) out.push_back(i);
  return out;
}

std::pair<std::vector<PointId>, Pair> BarResolution::decompose(const std::vector<PointId>& p) const {
  if (p.size() < 2) throw Error(ErrorCode::ShapeMismatch, "resolution tuples have at least two points");
  std::vector<PointId> g = p;
  if (side_ == Side::Right) {
    g.back() = g[g.size() - 2];
    return {std::move(g), Pair{p[p.size() - 2], p.back()}};
  }
  g.front() = g[1];
  return {std::move(g), Pair{p[0], p[1]}};
}

std::optional<std::vector<PointId>> BarResolution::act(const std::vector<PointId>& p, const Pair& pair) const {
  if (p.size() < 2) throw Error(ErrorCode::ShapeMismatch, "resolution tuples have at least two points");
  if (side_ == Side::Right) {
    PointId last = p.back();
    if (pair.first != last || !between(space_, p[p.size() - 2], last, pair.second)) return std::nullopt;
    std::vector<PointId> out = p;
    out.back() = pair.second;
    return out;
  }
  PointId first = p.front();
  if (pair.second != first || !between(space_, pair.first, first, p[1])) return std::nullopt;
  std::vector<PointId> out = p;
  out.front() = pair.first;
  return out;
}

bool BarResolution::is_complex() const {
  for (int n = 2; n <= n_max_; ++n) {
    if (!(differential(n - 1) * differential(n)).is_zero()) return false;
  }
  if (n_max_ >= 1 && !(augmentation() * differential(1)).is_zero()) return false;
  return true;
}

HomologySummary BarResolution::homology(int n, const Grade& grade) const {
  if (n < 0 || n >= n_max_) throw Error(ErrorCode::ResolutionTooShort, "homology needs the next degree");
  const auto& here = indices_at(n, grade);
  SparseIntMatrix in = differential_block(n + 1, grade);
  SparseIntMatrix out = n == 0 ? SparseIntMatrix(0, here.size()) : differential_block(n, grade);
  HomologySummary h = homology_at(out, in, here.size());
  h.n = n;
  h.grade = grade;
  return h;
}

bool BarResolution::is_exact() const {
  if (n_max_ < 1 || !is_complex()) return false;
  // ε is onto S, and H_0 must have the size of S.
  SparseIntMatrix e = augmentation();
  if (snf(e) != std::vector<Integer>(space_.size(), Integer(1))) return false;
  for (const Grade& g : grades()) {
    for (int n = 0; n < n_max_; ++n) {
      HomologySummary h = homology(n, g);
      std::size_t expected = n == 0 && g == 0 ? space_.size() : 0;
      if (h.betti != expected || !h.torsion.empty()) return false;
    }
  }
  return true;
}

}  // namespace magnitude
