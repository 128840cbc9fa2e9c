#pragma once

#include "lieco/cohomology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieco {

struct PresymplecticForm {
  RatMat omega;   // omega_ij = gamma_ij + sum_k l0_k C^k_{ij}
  int rank = 0;   // always even
  RatMat basis;   // basis^T * omega * basis = J_rank (+) 0
};

/// Presymplectic matrix of the functional l0, optionally deformed by a
/// 2-cocycle gamma, with its exact rank and a hyperbolic-pair basis.
PresymplecticForm presymplectic_matrix(const LieAlgebra& L, const RatVec& l0,
                                       const std::optional<CocycleMatrix>& gamma = std::nullopt);

/// Exact kernel of omega. Without gamma this is the coadjoint isotropy
/// subalgebra of l0 and is checked to be closed under the bracket.
std::vector<RatVec> characteristic_subalgebra(const LieAlgebra& L, const RatVec& l0,
                                              const std::optional<CocycleMatrix>& gamma = std::nullopt);

/// Derivative of the deformed coadjoint action along X at mu:
/// value(Y) = mu([X, Y]) + gamma(X, Y).
CoalgebraVector coad_deformed_infinitesimal(const LieAlgebra& L, const AlgebraVector& x,
                                            const CoalgebraVector& mu,
                                            const std::optional<CocycleMatrix>& gamma = std::nullopt);

/// Orbit 2-form at the point nu: nu([X, Y]) + gamma(X, Y).
Rat orbit_symplectic_form_at(const LieAlgebra& L, const CoalgebraVector& nu,
                             const AlgebraVector& x, const AlgebraVector& y,
                             const std::optional<CocycleMatrix>& gamma = std::nullopt);

/// A generator exponentiating to a closed loop of the given period in the
/// realized group.
struct CompactGeneratorDatum {
  std::string name;
  RatVec generator;
  double period = 0.0;
};

struct IntegralityEntry {
  std::string name;
  bool in_characteristic_subalgebra = false; // outside -> skipped, not counted
  double pairing_times_period = 0.0;         // l0(X) * T
  double nearest_multiple = 0.0;             // closest point of 2*pi*Z
  bool integral = false;
};

struct IntegralityReport {
  bool integral = true; // conjunction over the checked (non-skipped) entries
  bool any_skipped = false;
  std::vector<IntegralityEntry> entries;
  // Periods are tested one datum at a time; joint commensurability of
  // several compact directions is not modeled.
  std::string modeling_note;
};

/// Quantization condition: l0(X) * T in 2*pi*Z within tol for every declared
/// compact generator lying in the characteristic subalgebra of l0.
IntegralityReport integrality_check(const LieAlgebra& L, const RatVec& l0,
                                    const std::vector<CompactGeneratorDatum>& data,
                                    double tol = 1e-9);

} // namespace lieco
