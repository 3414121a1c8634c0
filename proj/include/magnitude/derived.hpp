#pragma once

#include <cstddef>

#include "magnitude/chain.hpp"
#include "magnitude/distmod.hpp"
#include "magnitude/resolution.hpp"

namespace magnitude {

/// M̄ ⊗_{σX} P^left_• in grade ℓ, degrees 0..top. Degree k has basis m ⊗ g_t for
/// generators g_t = (x_0, x_0, ..., x_k) and m in the standard basis of
/// M(x_0)_{ℓ - |t|}; generators are recorded as ChainGenerator{t, index of m}.
/// Throws ResolutionTooShort unless top ≤ n_max and every needed tuple fits
/// under l_max.
BasedComplex tor_complex(const BarResolution& left, const DistanceModule& module, const Grade& grade, int top);

/// Tor^{σX}_{n,ℓ}(M̄, S) over ℤ.
HomologySummary tor_bidegree(const BarResolution& left, const DistanceModule& module, int n, const Grade& grade);
HomologySummary tor_bidegree(const BarResolution& left, const DistanceModule& module, int n, const Grade& grade,
                             const Field& field);
/// Builds the smallest left resolution that covers the query.
HomologySummary tor_bidegree(const QuasimetricSpace& space, const DistanceModule& module, int n, const Grade& grade);

/// Hom_{σX}(P^right_•, M̄) in internal grade -ℓ over `field`, degrees 0..top.
/// Degree k has basis (t, index into M(x_k)_{|t| - ℓ}) for t = (x_0, ..., x_k);
/// coboundaries[k] : C^k → C^{k+1} for k < top.
CochainComplex ext_complex(const BarResolution& right, const DistanceModule& module, const Grade& grade, int top,
                           const Field& field);

/// dim Ext^{n,ℓ}_{σX}(S, M̄) over `field`.
std::size_t ext_bidegree(const BarResolution& right, const DistanceModule& module, int n, const Grade& grade,
                         const Field& field);
std::size_t ext_bidegree(const QuasimetricSpace& space, const DistanceModule& module, int n, const Grade& grade,
                         const Field& field);

}  // namespace magnitude
