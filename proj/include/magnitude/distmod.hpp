#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "magnitude/linalg.hpp"
#include "magnitude/space.hpp"

namespace magnitude {

/// Raw distance-module data, not yet checked against the axioms.
///
/// components[x] maps a grade to the rank of the free module M(x)_grade (rank-0
/// grades may be omitted). actions[(x,y)][g] is the integer matrix of
/// M(x,y)_g : M(x)_g -> M(y)_{g + d(x,y)}, with rows indexing the target.
/// A missing action is the identity when x = y and zero otherwise.
struct ModuleData {
  std::vector<std::map<Grade, std::size_t>> components;
  std::map<std::pair<PointId, PointId>, std::map<Grade, IntMatrix>> actions;
};

struct ModuleViolation {
  ErrorCode kind;
  /// (x, y) for shape/identity problems, (x, y, z) for the composition law.
  std::vector<PointId> points;
  Grade grade;
  std::string message;
};

/// Every violated axiom, in deterministic order. Empty means valid.
std::vector<ModuleViolation> validate_module(const QuasimetricSpace& space, const ModuleData& data);

/// A distance module over a finite quasimetric space with free, finitely
/// generated components. Instances are always valid.
class DistanceModule {
 public:
  /// Throws the first violation reported by `validate_module`.
  static DistanceModule create(QuasimetricSpace space, ModuleData data);

  const QuasimetricSpace& space() const noexcept { return space_; }
  const ModuleData& data() const noexcept { return data_; }

  std::size_t rank(PointId x, const Grade& grade) const;
  const std::map<Grade, std::size_t>& components(PointId x) const { return data_.components.at(x); }
  /// Union of represented grades over all points, increasing.
  std::vector<Grade> grades() const;
  /// M(x,y)_grade; requires d(x,y) < ∞.
  IntMatrix action(PointId x, PointId y, const Grade& grade) const;

  friend bool operator==(const DistanceModule& a, const DistanceModule& b);

 private:
  DistanceModule(QuasimetricSpace space, ModuleData data) : space_(std::move(space)), data_(std::move(data)) {}

  QuasimetricSpace space_;
  ModuleData data_;
};

/// Triv(ℤ^rank placed at `grade`): zero actions between distinct points.
DistanceModule trivial_module(const QuasimetricSpace& space, const Grade& grade, std::size_t rank);
/// M[s]: every grade raised by s.
DistanceModule shift_module(const DistanceModule& module, const Grade& shift);
/// The projective e_x·σX as a distance module: ℤ at grade d(x,y) over y, identity
/// actions along betweenness.
DistanceModule representable_module(const QuasimetricSpace& space, PointId x);
/// M ⊕ N, with the basis of M first in every component. Throws SpaceMismatch.
DistanceModule direct_sum(const DistanceModule& a, const DistanceModule& b);

struct PointKernel {
  PointId point;
  std::vector<std::vector<Integer>> basis;
};

struct InvariantsAtGrade {
  Grade grade;
  std::size_t rank = 0;
  std::vector<PointKernel> pieces;
};

struct CoinvariantsAtGrade {
  Grade grade;
  std::size_t betti = 0;
  std::vector<Integer> torsion;
};

/// Inv(M)_g for every represented grade g.
std::vector<InvariantsAtGrade> invariants(const DistanceModule& module);
/// Coinv(M)_g for every represented grade g.
std::vector<CoinvariantsAtGrade> coinvariants(const DistanceModule& module);
/// Rank of Hom(K̃[grade], M), solved from the morphism equations over all pairs.
std::size_t hom_from_trivial(const DistanceModule& module, const Grade& grade);

}  // namespace magnitude
