#include "magnitude/distmod.hpp"

#include <algorithm>

#include "magnitude/error.hpp"

namespace magnitude {

namespace {

std::size_t rank_in(const ModuleData& data, PointId x, const Grade& grade) {
  const auto& comp = data.components[x];
  auto it = comp.find(grade);
  return it == comp.end() ? 0 : it->second;
}

IntMatrix action_in(const ModuleData& data, const QuasimetricSpace& space, PointId x, PointId y,
                    const Grade& grade) {
  const Grade target = grade + space.dist(x, y).value();
  if (auto pair = data.actions.find({x, y}); pair != data.actions.end()) {
    if (auto it = pair->second.find(grade); it != pair->second.end()) return it->second;
  }
  if (x == y) return IntMatrix::identity(rank_in(data, x, grade));
  return IntMatrix::zero(rank_in(data, y, target), rank_in(data, x, grade));
}

std::string witness(const QuasimetricSpace& space, const std::vector<PointId>& pts, const Grade& grade) {
  std::string out = "(";
  for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? "," : "") + space.label(pts[i]);
  return out + ") at grade " + grade.get_str();
}

// Drops rank-0 components, identity self-actions and zero actions.
ModuleData normalized(const ModuleData& data) {
  ModuleData out;
  out.components.resize(data.components.size());
  for (std::size_t x = 0; x < data.components.size(); ++x)
    for (const auto& [g, r] : data.components[x])
      if (r > 0) out.components[x][g] = r;
  for (const auto& [pair, by_grade] : data.actions)
    for (const auto& [g, m] : by_grade) {
      if (rank_in(data, pair.first, g) == 0) continue;
      bool trivial = pair.first == pair.second ? m == IntMatrix::identity(m.rows()) : m.is_zero();
      if (!trivial) out.actions[pair][g] = m;
    }
  return out;
}

}  // namespace

std::vector<ModuleViolation> validate_module(const QuasimetricSpace& space, const ModuleData& data) {
  std::vector<ModuleViolation> out;
  const std::size_t n = space.size();
  if (data.components.size() != n) {
    out.push_back({ErrorCode::ShapeMismatch, {}, Grade(0), "module has components for " +
                   std::to_string(data.components.size()) + " points, space has " + std::to_string(n)});
    return out;
  }
  for (const auto& [pair, by_grade] : data.actions) {
    auto [x, y] = pair;
    if (x >= n || y >= n) {
      out.push_back({ErrorCode::ShapeMismatch, {}, Grade(0), "action refers to an unknown point"});
      continue;
    }
    if (space.dist(x, y).is_infinite()) {
      out.push_back({ErrorCode::ShapeMismatch, {x, y}, Grade(0),
                     "action on " + witness(space, {x, y}, Grade(0)) + " runs along an infinite distance"});
      continue;
    }
    for (const auto& [g, m] : by_grade) {
      std::size_t src = rank_in(data, x, g);
      std::size_t dst = rank_in(data, y, g + space.dist(x, y).value());
      if (m.rows() != dst || m.cols() != src) {
        out.push_back({ErrorCode::ShapeMismatch, {x, y}, g,
                       "action matrix " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                           " should be " + std::to_string(dst) + "x" + std::to_string(src) + " " +
                           witness(space, {x, y}, g)});
      }
    }
  }
  if (!out.empty()) return out;

  for (PointId x = 0; x < n; ++x)
    for (const auto& [g, r] : data.components[x]) {
      if (action_in(data, space, x, x, g) != IntMatrix::identity(r)) {
        out.push_back({ErrorCode::IdentityViolation, {x, x}, g, "action on " + witness(space, {x, x}, g) + " is not the identity"});
      }
    }
  for (PointId x = 0; x < n; ++x)
    for (PointId y = 0; y < n; ++y) {
      if (space.dist(x, y).is_infinite()) continue;
      for (PointId z = 0; z < n; ++z) {
        if (space.dist(y, z).is_infinite()) continue;
        for (const auto& [g, r] : data.components[x]) {
          if (r == 0) continue;
          IntMatrix composite = action_in(data, space, y, z, g + space.dist(x, y).value()) *
                                action_in(data, space, x, y, g);
          bool ok = between(space, x, y, z) ? composite == action_in(data, space, x, z, g) : composite.is_zero();
          if (!ok) {
            out.push_back({ErrorCode::CompositionViolation, {x, y, z}, g,
                           "composition law fails for " + witness(space, {x, y, z}, g)});
          }
        }
      }
    }
  return out;
}

DistanceModule DistanceModule::create(QuasimetricSpace space, ModuleData data) {
  auto violations = validate_module(space, data);
  if (!violations.empty()) {
    const auto& first = violations.front();
    std::vector<std::string> labels;
    for (PointId p : first.points) labels.push_back(space.label(p));
    labels.push_back(first.grade.get_str());
    throw Error(first.kind, first.message, labels);
  }
  return DistanceModule(std::move(space), std::move(data));
}

std::size_t DistanceModule::rank(PointId x, const Grade& grade) const { return rank_in(data_, x, grade); }

std::vector<Grade> DistanceModule::grades() const {
  std::set<Grade> all;
  for (const auto& comp : data_.components)
    for (const auto& [g, r] : comp)
      if (r > 0) all.insert(g);
  return {all.begin(), all.end()};
}

IntMatrix DistanceModule::action(PointId x, PointId y, const Grade& grade) const {
  if (space_.dist(x, y).is_infinite()) {
    throw Error(ErrorCode::InvalidArgument, "no action along an infinite distance",
                {space_.label(x), space_.label(y)});
  }
  return action_in(data_, space_, x, y, grade);
}

bool operator==(const DistanceModule& a, const DistanceModule& b) {
  if (!(a.space_ == b.space_)) return false;
  ModuleData na = normalized(a.data_);
  ModuleData nb = normalized(b.data_);
  if (na.components != nb.components) return false;
  if (na.actions.size() != nb.actions.size()) return false;
  return std::equal(na.actions.begin(), na.actions.end(), nb.actions.begin(), [](const auto& l, const auto& r) {
    return l.first == r.first && l.second == r.second;
  });
}

DistanceModule trivial_module(const QuasimetricSpace& space, const Grade& grade, std::size_t rank) {
  ModuleData data;
  data.components.resize(space.size());
  if (rank > 0) {
    for (auto& comp : data.components) comp[grade] = rank;
  }
  return DistanceModule::create(space, std::move(data));
}

DistanceModule shift_module(const DistanceModule& module, const Grade& shift) {
  ModuleData data;
  for (const auto& comp : module.data().components) {
    std::map<Grade, std::size_t> shifted;
    for (const auto& [g, r] : comp) shifted[g + shift] = r;
    data.components.push_back(std::move(shifted));
  }
  for (const auto& [pair, by_grade] : module.data().actions)
    for (const auto& [g, m] : by_grade) data.actions[pair][g + shift] = m;
  return DistanceModule::create(module.space(), std::move(data));
}

DistanceModule representable_module(const QuasimetricSpace& space, PointId x) {
  if (x >= space.size()) throw Error(ErrorCode::UnknownPoint, "unknown point index " + std::to_string(x));
  ModuleData data;
  data.components.resize(space.size());
  for (PointId y = 0; y < space.size(); ++y) {
    if (space.dist(x, y).is_finite()) data.components[y][space.dist(x, y).value()] = 1;
  }
  for (PointId y = 0; y < space.size(); ++y) {
    if (space.dist(x, y).is_infinite()) continue;
    for (PointId z = 0; z < space.size(); ++z) {
      if (y == z || space.dist(y, z).is_infinite()) continue;
      if (between(space, x, y, z)) data.actions[{y, z}][space.dist(x, y).value()] = IntMatrix::identity(1);
    }
  }
  return DistanceModule::create(space, std::move(data));
}

DistanceModule direct_sum(const DistanceModule& a, const DistanceModule& b) {
  if (!(a.space() == b.space())) throw Error(ErrorCode::SpaceMismatch, "summands live over different spaces");
  const QuasimetricSpace& space = a.space();
  ModuleData data;
  data.components.resize(space.size());
  for (PointId x = 0; x < space.size(); ++x) {
    for (const auto& [g, r] : a.components(x)) data.components[x][g] += r;
    for (const auto& [g, r] : b.components(x)) data.components[x][g] += r;
  }
  for (PointId x = 0; x < space.size(); ++x)
    for (PointId y = 0; y < space.size(); ++y) {
      if (space.dist(x, y).is_infinite()) continue;
      for (const auto& [g, r] : data.components[x]) {
        IntMatrix ma = a.action(x, y, g);
        IntMatrix mb = b.action(x, y, g);
        IntMatrix m(ma.rows() + mb.rows(), ma.cols() + mb.cols());
        for (std::size_t i = 0; i < ma.rows(); ++i)
          for (std::size_t j = 0; j < ma.cols(); ++j) m(i, j) = ma(i, j);
        for (std::size_t i = 0; i < mb.rows(); ++i)
          for (std::size_t j = 0; j < mb.cols(); ++j) m(ma.rows() + i, ma.cols() + j) = mb(i, j);
        data.actions[{x, y}][g] = std::move(m);
      }
    }
  return DistanceModule::create(space, std::move(data));
}

std::vector<InvariantsAtGrade> invariants(const DistanceModule& module) {
  const auto& space = module.space();
  std::vector<InvariantsAtGrade> out;
  for (const Grade& g : module.grades()) {
    InvariantsAtGrade entry{g, 0, {}};
    for (PointId x = 0; x < space.size(); ++x) {
      std::size_t r = module.rank(x, g);
      if (r == 0) continue;
      // Stack M(x,y)_g over y ≠ x with d(x,y) < ∞.
      std::vector<IntMatrix> blocks;
      std::size_t total_rows = 0;
      for (PointId y = 0; y < space.size(); ++y) {
        if (y == x || space.dist(x, y).is_infinite()) continue;
        blocks.push_back(module.action(x, y, g));
        total_rows += blocks.back().rows();
      }
      IntMatrix stacked(total_rows, r);
      std::size_t offset = 0;
      for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
          for (std::size_t j = 0; j < r; ++j) stacked(offset + i, j) = b(i, j);
        offset += b.rows();
      }
      auto kernel = integer_kernel(stacked);
      entry.rank += kernel.size();
      entry.pieces.push_back({x, std::move(kernel)});
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<CoinvariantsAtGrade> coinvariants(const DistanceModule& module) {
  const auto& space = module.space();
  std::vector<CoinvariantsAtGrade> out;
  for (const Grade& g : module.grades()) {
    CoinvariantsAtGrade entry{g, 0, {}};
    std::vector<Integer> torsion;
    for (PointId x = 0; x < space.size(); ++x) {
      std::size_t r = module.rank(x, g);
      if (r == 0) continue;
      // Images of M(y,x) for y ≠ x with d(y,x) < ∞, side by side.
      std::vector<IntMatrix> blocks;
      std::size_t total_cols = 0;
      for (PointId y = 0; y < space.size(); ++y) {
        if (y == x || space.dist(y, x).is_infinite()) continue;
        Grade source = g - space.dist(y, x).value();
        if (module.rank(y, source) == 0) continue;
        blocks.push_back(module.action(y, x, source));
        total_cols += blocks.back().cols();
      }
      SparseIntMatrix images(r, total_cols);
      std::size_t offset = 0;
      for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
          for (std::size_t j = 0; j < b.cols(); ++j) images.set(i, offset + j, b(i, j));
        offset += b.cols();
      }
      auto factors = snf(images);
      entry.betti += r - factors.size();
      for (const auto& f : factors)
        if (f > 1) torsion.push_back(f);
    }
    entry.torsion = normalize_invariant_factors(std::move(torsion));
    std::erase_if(entry.torsion, [](const Integer& f) { return f == 1; });
    out.push_back(std::move(entry));
  }
  return out;
}

std::size_t hom_from_trivial(const DistanceModule& module, const Grade& grade) {
  const auto& space = module.space();
  // Unknowns: φ(x)(1) ∈ M(x)_grade for every x, concatenated.
  std::vector<std::size_t> offset(space.size() + 1, 0);
  for (PointId x = 0; x < space.size(); ++x) offset[x + 1] = offset[x] + module.rank(x, grade);
  const std::size_t unknowns = offset.back();
  if (unknowns == 0) return 0;
  // One block of equations per pair (x,y) with d(x,y) < ∞:
  //   φ(x)(a)·y = φ(y)(a·y), where a·y = a if x = y and 0 otherwise.
  std::vector<std::pair<PointId, PointId>> pairs;
  std::size_t rows = 0;
  for (PointId x = 0; x < space.size(); ++x)
    for (PointId y = 0; y < space.size(); ++y) {
      if (space.dist(x, y).is_infinite()) continue;
      pairs.emplace_back(x, y);
      rows += module.rank(y, grade + space.dist(x, y).value());
    }
  SparseIntMatrix system(rows, unknowns);
  std::size_t row = 0;
  for (auto [x, y] : pairs) {
    IntMatrix act = module.action(x, y, grade);
    for (std::size_t i = 0; i < act.rows(); ++i)
      for (std::size_t j = 0; j < act.cols(); ++j) system.add(row + i, offset[x] + j, act(i, j));
    if (x == y) {
      for (std::size_t i = 0; i < act.rows(); ++i) system.add(row + i, offset[y] + i, Integer(-1));
    }
    row += act.rows();
  }
  return unknowns - rank_over_field(system, Field::rationals());
}

}  // namespace magnitude
