#pragma once

#include "lieco/symplectic.hpp"

#include <Eigen/Dense>

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace lieco {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Group element in the realization's global or second-kind coordinates,
/// plus the phase coordinate of the U(1) extension (trivial when unused).
struct GroupElement {
  Vec g;
  double theta = 0.0;
};

/// Group 2-cocycle attached to a realization, with its declared algebra-level
/// data. For pseudo-cocycles (xi = delta lambda) the generating function and
/// its gradient at the identity are carried along.
struct RealizationCocycle {
  std::string name;
  std::function<double(const Vec&, const Vec&)> xi; // xi(g1, g2)
  std::function<double(const Vec&)> lambda;         // empty for true cocycles
  RatVec lambda0;                                   // gradient of lambda at e (empty if none)
  CocycleMatrix gamma0;                             // algebra cocycle of xi
};

/// Coadjoint-invariant polynomial, valid for the undeformed action only.
struct CatalogInvariant {
  std::string name;
  std::function<Rat(const RatVec&)> eval;
};

/// Concrete Lie group over one of the catalog algebras: coordinates, exact
/// group law, adjoint in closed form, one-parameter exponentials.
/// Every map may throw ChartOverflow when coordinates leave the chart.
struct GroupRealization {
  std::string name;
  LieAlgebra algebra;

  Vec lo, hi;               // chart box, also the orbit-search bounds
  Vec sample_lo, sample_hi; // box where sampling and extraction are stable

  std::function<Vec(const Vec&, const Vec&)> law;
  std::function<Vec(const Vec&)> inverse;
  std::function<Mat(const Vec&)> ad; // Ad(g) on algebra component columns

  /// Coordinates of exp(t * X).
  std::function<Vec(const Vec& x, double t)> exp_one_param;

  /// Optional closed forms for the parameter maps below. Matrix groups set
  /// these so Ad along exp(t_1 X_1)...exp(t_n X_n) never needs chart
  /// extraction and stays total in t.
  std::function<Mat(const Vec&)> ad_of_params_override;
  std::function<Vec(const Vec&)> element_of_params_override;

  std::vector<RealizationCocycle> cocycles;
  std::vector<CatalogInvariant> invariants;
  std::vector<CompactGeneratorDatum> compact_data;

  std::string note; // advisory attached to orbit reports (may be empty)

  int dim() const { return algebra.dim(); }
  Vec identity() const { return Vec::Zero(dim()); }

  /// Coad(g) = Ad(g^{-1})^T acting on dual component columns.
  Mat coad(const Vec& g) const;

  /// Ad / Coad of h(t) = exp(t_1 X_1) ... exp(t_n X_n); defined for every t,
  /// no coordinate extraction involved.
  Mat ad_of_params(const Vec& t) const;
  Mat coad_of_params(const Vec& t) const;

  /// Coordinates of h(t); may throw ChartOverflow on extraction failure.
  Vec element_of_params(const Vec& t) const;

  const RealizationCocycle* find_cocycle(const std::string& cname) const; // null when absent
  const RealizationCocycle& cocycle(const std::string& cname) const;     // throws UnknownName
};

/// Self-tested realization catalog; built once. Throws CatalogSelfTestFailure
/// if any entry violates its load-time checks.
const std::vector<std::shared_ptr<const GroupRealization>>& catalog();
std::shared_ptr<const GroupRealization> catalog_find(const std::string& name); // null when absent

/// Left/right translation differentials at the identity, by central
/// differences of the law: columns are the invariant fields at g.
Mat left_invariant_frame(const GroupRealization& G, const Vec& g);  // d/dh law(g, h)|_e
Mat right_invariant_frame(const GroupRealization& G, const Vec& g); // d/dh law(h, g)|_e

/// How the coboundary operator lets the group act on cochain values.
enum class ActionSpec {
  TrivialReal, // values in R, action ignored
  CoadDual     // values in the dual space, acted on by Coad(g)
};

using RealCochain = std::function<double(std::span<const Vec>)>;
using DualCochain = std::function<Vec(std::span<const Vec>)>;

/// Group cochain coboundary, degrees 0..3:
/// (d c)(g_1..g_{n+1}) = g_1 * c(g_2..g_{n+1})
///   + sum_i (-1)^i c(g_1, ..., g_i g_{i+1}, ..., g_{n+1})
///   + (-1)^{n+1} c(g_1..g_n).
/// Throws UnsupportedDegree for n > 3.
double group_coboundary(const GroupRealization& G, ActionSpec action, int degree,
                        const RealCochain& c, std::span<const Vec> args);
Vec group_coboundary(const GroupRealization& G, ActionSpec action, int degree,
                     const DualCochain& c, std::span<const Vec> args);

/// Coboundary cocycle of a generating function:
/// xi_lambda(g1, g2) = lambda(g1 g2) - lambda(g1) - lambda(g2).
double coboundary_from_lambda(const GroupRealization& G,
                              const std::function<double(const Vec&)>& lambda,
                              const Vec& g1, const Vec& g2);

/// Gradient of lambda at the identity, central differences.
Vec lambda_gradient(const GroupRealization& G, const std::function<double(const Vec&)>& lambda);

struct ThetaEvaluation {
  Vec dual_components;        // d xi(g', g)/d g^i at g' = g^{-1}
  double phase_component = 1; // coefficient of the phase direction
};

/// Connection 1-form of the U(1) extension by xi, evaluated at g.
ThetaEvaluation theta_at(const GroupRealization& G, const RealizationCocycle& xi, const Vec& g);

/// Noether charges F_i(g): the pairing of theta with the right invariant
/// extended fields. Satisfies F(g' g) = Coad(g') F(g) + F(g'), F(e) = 0.
Vec noether_invariants(const GroupRealization& G, const RealizationCocycle& xi, const Vec& g);

/// F(h(t)) for h(t) = exp(t_1 X_1)...exp(t_n X_n) without extracting the
/// coordinates of h(t): closed form Coad(h) l0 - l0 when xi trivializes by a
/// generating function, otherwise composed factor by factor through the
/// cocycle property. Total in t for every catalog realization.
Vec noether_of_params(const GroupRealization& G, const RealizationCocycle& xi, const Vec& t);

/// D_ij = dF_i/dg^j at the identity; equals the declared gamma0 entrywise.
Mat noether_differential(const GroupRealization& G, const RealizationCocycle& xi);

/// (mu, mu_zeta) -> (Coad(g) mu + mu_zeta F(g), mu_zeta).
std::pair<Vec, double> extended_coadjoint(const GroupRealization& G, const RealizationCocycle& xi,
                                          const Vec& g, const Vec& mu, double mu_zeta);

/// gamma_lambda(g) = Coad(g) l0 - l0; depends on lambda only through l0.
Vec symplectic_coboundary_of_lambda(const GroupRealization& G, const Vec& l0, const Vec& g);

/// Max-norm residual of Ad(g^{-1})^T Omega(l0) Ad(g^{-1}) - Omega(Coad(g) l0);
/// zero for every g by equivariance of the presymplectic form.
double ad_equivariance_residual(const GroupRealization& G, const RatVec& l0, const Vec& g);

struct VerifyLine {
  std::string check;
  double worst = 0.0;
  double tol = 0.0;
  bool ok = true;
};

struct VerifyReport {
  bool ok = true;
  std::vector<VerifyLine> lines;
};

/// Full randomized invariant suite for one realization: group axioms, Ad
/// homomorphism, cocycle identities, declared gamma0 consistency, coboundary
/// nilpotency, Noether cocycle property and differential, theta additivity,
/// Ad equivariance, invariant constancy along coadjoint flows.
VerifyReport group_verify(const GroupRealization& G, int samples, uint64_t seed);

/// Deterministic sample of chart coordinates inside the stable box.
Vec sample_point(const GroupRealization& G, std::mt19937_64& rng);

} // namespace lieco
