#pragma once

#include "lieco/group.hpp"

namespace lieco {

enum class OrbitStatus { Equivalent, Distinct, Inconclusive };

const char* to_string(OrbitStatus s);

struct OrbitVerdict {
  OrbitStatus status = OrbitStatus::Inconclusive;
  /// Equivalent: parameters t of the witness h = exp(t_1 X_1)...exp(t_n X_n)
  /// with Coad_gamma(h) mu_from = mu_to.
  std::optional<Vec> witness;
  double residual = 0.0;          // best |Coad_gamma(h) mu1 - mu2| reached
  std::string separating_invariant; // set when the screen decided Distinct
  std::string note;                 // realization advisory, when present
};

struct InvariantProfile {
  int omega_rank = 0;
  std::vector<std::pair<std::string, Rat>> casimirs; // undeformed action only
};

/// Orbit invariants of mu: presymplectic rank (with the deformation's
/// algebra cocycle when xi is given) and, for the undeformed action, the
/// catalog's invariant polynomials.
InvariantProfile orbit_invariants(const GroupRealization& G, const RealizationCocycle* xi,
                                  const RatVec& mu);

struct SearchParams {
  double tol = 1e-8;
  uint64_t seed = 42;
  int restarts = 32;
  int budget = 2000; // objective evaluations per restart
};

/// Semi-decision of orbit membership under Coad (xi == nullptr) or the
/// deformed action Coad_gamma with gamma = Noether cocycle of xi.
/// Equivalent and Distinct are definitive; Inconclusive carries the best
/// residual found.
OrbitVerdict same_orbit(const GroupRealization& G, const RealizationCocycle* xi,
                        const RatVec& mu1, const RatVec& mu2, const SearchParams& params = {});

/// Pseudo-extension class comparison of the functionals l0 and l0b: orbit
/// membership under the plain action or, when base_xi is given, under its
/// deformed action. Decisions are pairwise; no quotient structure is built.
OrbitVerdict pseudo_class_equivalent(const GroupRealization& G, const RealizationCocycle* base_xi,
                                     const RatVec& l0a, const RatVec& l0b,
                                     const SearchParams& params = {});

/// Residual of a claimed witness h(t) mapping mu_from to mu_to:
/// max of |Coad_gamma(h) mu_from - mu_to| and the max-norm gap between the
/// conjugated presymplectic matrix of mu_from and the one of mu_to.
double symplectomorphism_witness_check(const GroupRealization& G, const RealizationCocycle* xi,
                                       const RatVec& mu_to, const RatVec& mu_from, const Vec& t);

} // namespace lieco
