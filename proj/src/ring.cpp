#include "magnitude/ring.hpp"

#include <algorithm>

#include "magnitude/error.hpp"

namespace magnitude {

namespace {

bool same_space(const Cochain& a, const Cochain& b) {
  return a.space == b.space || (a.space && b.space && *a.space == *b.space);
}

void require_compatible(const Cochain& a, const Cochain& b) {
  if (!same_space(a, b)) throw Error(ErrorCode::SpaceMismatch, "cochains live over different spaces");
  if (!(a.field == b.field)) throw Error(ErrorCode::InvalidField, "cochains take values in different fields");
}

std::vector<SparseVec> columns(const SparseRatMatrix& m) {
  std::vector<SparseVec> out(m.cols());
  for (const auto& [key, value] : m.entries()) out[key.second][key.first] = value;
  return out;
}

std::size_t tuple_index(const std::vector<Tuple>& basis, const std::vector<PointId>& points) {
  auto it = std::lower_bound(basis.begin(), basis.end(), points,
                             [](const Tuple& t, const std::vector<PointId>& p) { return t.points < p; });
  if (it == basis.end() || it->points != points) {
    throw Error(ErrorCode::InvalidArgument, "tuple is not a generator of this bidegree");
  }
  return static_cast<std::size_t>(it - basis.begin());
}

void require_left(const BarResolution& left, const Cochain& c) {
  if (left.side() != Side::Left) throw Error(ErrorCode::InvalidArgument, "Yoneda lifts use the left resolution");
  if (!c.space || !(left.space() == *c.space)) {
    throw Error(ErrorCode::SpaceMismatch, "cochain and resolution live over different spaces");
  }
}

std::vector<PointId> with_repeated_head(const std::vector<PointId>& t) {
  std::vector<PointId> g{t.front()};
  g.insert(g.end(), t.begin(), t.end());
  return g;
}

}  // namespace

Rational Cochain::at(const std::vector<PointId>& tuple) const {
  auto it = values.find(tuple);
  return it == values.end() ? Rational(0) : it->second;
}

void Cochain::add(const std::vector<PointId>& tuple, const Rational& value) {
  if (tuple.size() != static_cast<std::size_t>(degree) + 1) {
    throw Error(ErrorCode::InvalidArgument, "tuple length does not match the cochain degree");
  }
  for (std::size_t i = 0; i + 1 < tuple.size(); ++i) {
    if (tuple[i] == tuple[i + 1]) throw Error(ErrorCode::InvalidArgument, "cochains live on normalized tuples");
  }
  ExtDist length = tuple_length(*space, tuple);
  if (length.is_infinite() || length.value() != grade) {
    throw Error(ErrorCode::InvalidArgument, "tuple grade does not match the cochain grade");
  }
  Rational next = field.add(at(tuple), value);
  if (next == 0) {
    values.erase(tuple);
  } else {
    values[tuple] = next;
  }
}

bool operator==(const Cochain& a, const Cochain& b) {
  return same_space(a, b) && a.field == b.field && a.degree == b.degree && a.grade == b.grade && a.values == b.values;
}

Cochain zero_cochain(std::shared_ptr<const QuasimetricSpace> space, const Field& field, int degree, const Grade& grade) {
  Cochain c;
  c.space = std::move(space);
  c.field = field;
  c.degree = degree;
  c.grade = grade;
  return c;
}

Cochain dual_cochain(std::shared_ptr<const QuasimetricSpace> space, const Field& field,
                     const std::vector<PointId>& tuple) {
  if (tuple.empty()) throw Error(ErrorCode::InvalidArgument, "empty tuple");
  ExtDist length = tuple_length(*space, tuple);
  if (length.is_infinite()) throw Error(ErrorCode::InvalidArgument, "tuple has infinite length");
  Cochain c = zero_cochain(std::move(space), field, static_cast<int>(tuple.size()) - 1, length.value());
  c.add(tuple, 1);
  return c;
}

Cochain unit_cochain(std::shared_ptr<const QuasimetricSpace> space, const Field& field) {
  Cochain c = zero_cochain(std::move(space), field, 0, 0);
  for (PointId x = 0; x < c.space->size(); ++x) c.add({x}, 1);
  return c;
}

Cochain cup(const Cochain& psi, const Cochain& phi) {
  require_compatible(psi, phi);
  Cochain out = zero_cochain(psi.space, psi.field, psi.degree + phi.degree, psi.grade + phi.grade);
  for (const auto& [front, a] : psi.values) {
    if (tuple_length(*psi.space, front) != ExtDist(psi.grade)) continue;
    for (auto it = phi.values.lower_bound({front.back()}); it != phi.values.end() && it->first.front() == front.back();
         ++it) {
      if (tuple_length(*phi.space, it->first) != ExtDist(phi.grade)) continue;
      std::vector<PointId> t = front;
      t.insert(t.end(), it->first.begin() + 1, it->first.end());
      out.add(t, psi.field.mul(a, it->second));
    }
  }
  return out;
}

Cochain coboundary(const Cochain& phi) {
  Cochain out = zero_cochain(phi.space, phi.field, phi.degree + 1, phi.grade);
  const QuasimetricSpace& space = *phi.space;
  for (const auto& [s, value] : phi.values) {
    // (δφ)(t) = Σ_i (-1)^i φ(d_i t): t arises from s by inserting a point between s_{i-1} and s_i.
    for (std::size_t i = 1; i < s.size(); ++i)
      for (PointId z = 0; z < space.size(); ++z) {
        if (z == s[i - 1] || z == s[i] || !between(space, s[i - 1], z, s[i])) continue;
        std::vector<PointId> t = s;
        t.insert(t.begin() + static_cast<std::ptrdiff_t>(i), z);
        out.add(t, i % 2 == 0 ? value : phi.field.neg(value));
      }
  }
  return out;
}

bool is_cocycle(const Cochain& phi) { return coboundary(phi).is_zero(); }

bool is_coboundary(const Cochain& phi) {
  if (phi.is_zero()) return true;
  if (phi.degree == 0) return false;
  CochainComplex cx = magnitude_cochain_complex(*phi.space, phi.grade, phi.degree, phi.field);
  EchelonBasis image(phi.field);
  for (const auto& col : columns(cx.coboundaries[static_cast<std::size_t>(phi.degree) - 1])) image.insert(col);
  SparseVec v;
  const auto& basis = cx.bases[static_cast<std::size_t>(phi.degree)];
  for (const auto& [t, value] : phi.values) {
    auto it = std::lower_bound(basis.begin(), basis.end(), ChainGenerator{Tuple{t, phi.grade}, 0});
    v[static_cast<std::size_t>(it - basis.begin())] = value;
  }
  return image.contains(v);
}

SparseVec CohomologyClassSet::to_vector(const Cochain& c) const {
  SparseVec v;
  for (const auto& [t, value] : c.values) v[tuple_index(basis_, t)] = value;
  return v;
}

std::vector<Rational> CohomologyClassSet::coordinates(const Cochain& cocycle) const {
  if (cocycle.degree != degree_ || cocycle.grade != grade_ || !(cocycle.field == field_)) {
    throw Error(ErrorCode::NotACocycle, "cochain has the wrong bidegree or field for these classes");
  }
  if (!is_cocycle(cocycle)) throw Error(ErrorCode::NotACocycle, "cochain is not a cocycle");
  auto combo = echelon_->coordinates(to_vector(cocycle));
  if (!combo) throw Error(ErrorCode::NotACocycle, "cochain is not a cocycle");
  std::vector<Rational> out;
  for (std::size_t idx : insertion_index_) {
    auto it = combo->find(idx);
    out.push_back(it == combo->end() ? Rational(0) : it->second);
  }
  return out;
}

CohomologyClassSet cohomology_classes(std::shared_ptr<const QuasimetricSpace> space, int n, const Grade& grade,
                                      const Field& field) {
  if (n < 0 || grade < 0) throw Error(ErrorCode::InvalidArgument, "bidegree must be nonnegative");
  CochainComplex cx = magnitude_cochain_complex(*space, grade, n, field);
  CohomologyClassSet set(field);
  set.degree_ = n;
  set.grade_ = grade;
  for (const auto& g : cx.bases[static_cast<std::size_t>(n)]) set.basis_.push_back(g.tuple);
  if (n > 0) {
    for (const auto& col : columns(cx.coboundaries[static_cast<std::size_t>(n) - 1])) set.echelon_->insert(col);
  }
  for (const auto& z : kernel_basis(cx.coboundaries[static_cast<std::size_t>(n)], field)) {
    std::size_t idx = set.echelon_->inserted();
    if (!set.echelon_->insert(z)) continue;
    Cochain rep = zero_cochain(space, field, n, grade);
    for (const auto& [i, value] : z) rep.add(set.basis_[i].points, value);
    set.representatives_.push_back(std::move(rep));
    set.insertion_index_.push_back(idx);
  }
  return set;
}

CohomologyClassSet cohomology_classes(const QuasimetricSpace& space, int n, const Grade& grade, const Field& field) {
  return cohomology_classes(std::make_shared<const QuasimetricSpace>(space), n, grade, field);
}

SparseRatMatrix yoneda_lift(const BarResolution& left, const Cochain& phi, int k) {
  require_left(left, phi);
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative lift index");
  const int top = phi.degree + k;
  if (top > left.n_max()) throw Error(ErrorCode::ResolutionTooShort, "resolution degree too small for the lift");
  const auto& source = left.basis(top);
  SparseRatMatrix lift(left.basis(k).size(), source.size());
  for (std::size_t col = 0; col < source.size(); ++col) {
    const auto& p = source[col].points;
    // p = (y, x_0, ..., x_{n+k}); φ reads x_k..x_{n+k}, the front keeps y, x_0..x_k.
    std::vector<PointId> back(p.begin() + k + 1, p.end());
    Rational value = phi.at(back);
    if (value == 0) continue;
    std::vector<PointId> front(p.begin(), p.begin() + k + 2);
    auto row = left.index_of(k, front);
    if (!row) throw Error(ErrorCode::ResolutionTooShort, "lift leaves the truncated resolution");
    lift.add(*row, col, value);
  }
  return lift;
}

SparseRatMatrix cocycle_to_map(const BarResolution& left, const Cochain& psi) {
  require_left(left, psi);
  if (psi.degree > left.n_max()) throw Error(ErrorCode::ResolutionTooShort, "resolution degree too small");
  SparseRatMatrix map(left.space().size(), left.basis(psi.degree).size());
  for (const auto& [t, value] : psi.values) {
    auto col = left.index_of(psi.degree, with_repeated_head(t));
    if (!col) throw Error(ErrorCode::ResolutionTooShort, "cocycle grade exceeds the truncated resolution");
    map.add(t.front(), *col, value);
  }
  return map;
}

bool lift_commutes(const BarResolution& left, const Cochain& phi, int k) {
  const Field& f = phi.field;
  if (k == 0) {
    SparseRatMatrix lhs = reduce_into(to_rational(left.augmentation()) * yoneda_lift(left, phi, 0), f);
    return lhs == reduce_into(cocycle_to_map(left, phi), f);
  }
  SparseRatMatrix lhs = to_rational(left.differential(k)) * yoneda_lift(left, phi, k);
  SparseRatMatrix rhs = yoneda_lift(left, phi, k - 1) * to_rational(left.differential(phi.degree + k));
  return reduce_into(lhs, f) == reduce_into(rhs, f);
}

Cochain yoneda_product(const BarResolution& left, const Cochain& psi, const Cochain& phi) {
  require_compatible(psi, phi);
  if (!is_cocycle(psi) || !is_cocycle(phi)) throw Error(ErrorCode::NotACocycle, "Yoneda product needs cocycles");
  const int degree = psi.degree + phi.degree;
  const Grade grade = psi.grade + phi.grade;
  if (degree > left.n_max() || grade > left.l_max()) {
    throw Error(ErrorCode::ResolutionTooShort, "resolution too small for the product bidegree");
  }
  SparseRatMatrix composite =
      reduce_into(cocycle_to_map(left, psi) * yoneda_lift(left, phi, psi.degree), psi.field);
  Cochain out = zero_cochain(psi.space, psi.field, degree, grade);
  for (const auto& t : enumerate_tuples(left.space(), degree, grade, true)) {
    auto col = left.index_of(degree, with_repeated_head(t.points));
    Rational value = composite.at(t.points.front(), *col);
    if (value != 0) out.add(t.points, value);
  }
  return out;
}

RingTable ring_table(const QuasimetricSpace& space, int n_max, const Grade& l_max, const Field& field) {
  if (n_max < 0 || l_max < 0) throw Error(ErrorCode::InvalidArgument, "bounds must be nonnegative");
  auto shared = std::make_shared<const QuasimetricSpace>(space);
  RingTable table;
  table.field = field;
  std::vector<Grade> grades = attainable_grades(space, l_max);
  std::map<std::pair<int, Grade>, CohomologyClassSet> all;
  for (int n = 0; n <= n_max; ++n)
    for (const Grade& g : grades) all.emplace(std::make_pair(n, g), cohomology_classes(shared, n, g, field));
  for (const auto& [key, set] : all)
    if (set.size()) table.classes.emplace(key, set);

  for (const auto& [lkey, lhs] : table.classes)
    for (const auto& [rkey, rhs] : table.classes) {
      const int degree = lkey.first + rkey.first;
      const Grade grade = lkey.second + rkey.second;
      if (degree > n_max || grade > l_max) continue;
      auto target = all.find({degree, grade});
      for (std::size_t i = 0; i < lhs.size(); ++i)
        for (std::size_t j = 0; j < rhs.size(); ++j) {
          RingProduct p{lkey.first, lkey.second, i, rkey.first, rkey.second, j, {}};
          Cochain product = cup(lhs.representatives()[i], rhs.representatives()[j]);
          if (target != all.end()) {
            auto coords = target->second.coordinates(product);
            for (std::size_t c = 0; c < coords.size(); ++c)
              if (coords[c] != 0) p.result.emplace_back(coords[c], c);
          } else if (!is_coboundary(product)) {
            throw Error(ErrorCode::InvalidArgument, "product lands outside the scanned grades");
          }
          table.products.push_back(std::move(p));
        }
    }
  return table;
}

}  // namespace magnitude
