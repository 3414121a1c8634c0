#include "magnitude/algebra.hpp"

#include <algorithm>
#include <set>

#include "magnitude/error.hpp"

namespace magnitude {

void AlgebraElement::add(const Pair& p, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
  for (const auto& [p, c] : b.terms) a.add(p, c);
  return a;
}

DistanceAlgebra::DistanceAlgebra(QuasimetricSpace space) : space_(std::move(space)) {
  for (PointId x = 0; x < space_.size(); ++x)
    for (PointId y = 0; y < space_.size(); ++y)
      if (space_.dist(x, y).is_finite()) basis_.emplace_back(x, y);
}

bool DistanceAlgebra::contains(const Pair& p) const {
  return p.first < space_.size() && p.second < space_.size() && space_.dist(p.first, p.second).is_finite();
}

Grade DistanceAlgebra::degree(const Pair& p) const {
  if (!contains(p)) throw Error(ErrorCode::InvalidArgument, "pair is not a basis element of the distance algebra");
  return space_.dist(p.first, p.second).value();
}

AlgebraElement DistanceAlgebra::pair(PointId x, PointId y) const {
  if (!contains({x, y})) throw Error(ErrorCode::InvalidArgument, "pair is not a basis element of the distance algebra");
  AlgebraElement e;
  e.add({x, y}, 1);
  return e;
}

AlgebraElement DistanceAlgebra::unit() const {
  AlgebraElement e;
  for (PointId x = 0; x < space_.size(); ++x) e.add({x, x}, 1);
  return e;
}

std::optional<Pair> DistanceAlgebra::multiply(const Pair& p, const Pair& q) const {
  if (p.second != q.first) return std::nullopt;
  if (!between(space_, p.first, p.second, q.second)) return std::nullopt;
  return Pair{p.first, q.second};
}

AlgebraElement DistanceAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement out;
  for (const auto& [p, c] : a.terms)
    for (const auto& [q, e] : b.terms) {
      if (auto r = multiply(p, q)) out.add(*r, c * e);
    }
  return out;
}

std::map<Grade, AlgebraElement> DistanceAlgebra::homogeneous_parts(const AlgebraElement& a) const {
  std::map<Grade, AlgebraElement> out;
  for (const auto& [p, c] : a.terms) out[degree(p)].add(p, c);
  return out;
}

bool DistanceAlgebra::is_associative() const {
  for (const auto& p : basis_)
    for (const auto& q : basis_) {
      auto pq = multiply(p, q);
      for (const auto& r : basis_) {
        auto qr = multiply(q, r);
        std::optional<Pair> left = pq ? multiply(*pq, r) : std::nullopt;
        std::optional<Pair> right = qr ? multiply(p, *qr) : std::nullopt;
        if (left != right) return false;
      }
    }
  return true;
}

DistanceAlgebra build_distance_algebra(const QuasimetricSpace& space) { return DistanceAlgebra(space); }

AlgebraElement algebra_multiply(const DistanceAlgebra& algebra, const AlgebraElement& a, const AlgebraElement& b) {
  return algebra.multiply(a, b);
}

std::vector<std::vector<Pair>> radical_powers(const DistanceAlgebra& algebra) {
  // Products of basis pairs are basis pairs or zero, so each power is spanned
  // by the pairs reachable as products.
  std::vector<Pair> positive;
  for (const auto& p : algebra.basis())
    if (p.first != p.second) positive.push_back(p);
  std::vector<std::vector<Pair>> powers{positive};
  while (!powers.back().empty()) {
    std::set<Pair> next;
    for (const auto& p : powers.back())
      for (const auto& q : positive)
        if (auto r = algebra.multiply(p, q)) next.insert(*r);
    powers.emplace_back(next.begin(), next.end());
  }
  return powers;
}

std::size_t nilpotency_index(const DistanceAlgebra& algebra) { return radical_powers(algebra).size(); }

DistanceModule QuotientModuleS::as_distance_module(const QuasimetricSpace& space) const {
  if (space.size() != points_) throw Error(ErrorCode::SpaceMismatch, "point count differs from S");
  return trivial_module(space, Grade(0), 1);
}

QuotientModuleS quotient_module_S(const DistanceAlgebra& algebra) { return QuotientModuleS(algebra.space().size()); }

}  // namespace magnitude
