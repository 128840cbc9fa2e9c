#include "lieco/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lieco {

const char* to_string(OrbitStatus s) {
  switch (s) {
    case OrbitStatus::Equivalent: return "equivalent";
    case OrbitStatus::Distinct: return "distinct";
    default: return "inconclusive";
  }
}

namespace {

constexpr double kJacStep = 1e-6;
constexpr double kPenalty = 1e6;

Vec ratvec_to_vec(const RatVec& v) {
  Vec out(Eigen::Index(v.size()));
  for (size_t i = 0; i < v.size(); ++i) out[Eigen::Index(i)] = rat_d(v[i]);
  return out;
}

// low discrepancy start points, one prime base per coordinate
double halton(uint64_t index, int base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * double(index % base);
    index /= base;
  }
  return r;
}

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

/// Objective: t -> Coad_gamma(h(t)) mu1 - mu2, with a flat penalty wall
/// where the chart cannot express h(t).
struct OrbitObjective {
  const GroupRealization& G;
  const RealizationCocycle* xi;
  Vec mu1, mu2;
  mutable long evals = 0;

  Vec residual(const Vec& t) const {
    ++evals;
    try {
      Vec moved = G.coad_of_params(t) * mu1;
      if (xi) moved += noether_of_params(G, *xi, t);
      return moved - mu2;
    } catch (const ChartOverflow&) {
      return Vec::Constant(mu1.size(), kPenalty);
    }
  }
};

struct LocalFit {
  Vec t;
  double norm = std::numeric_limits<double>::infinity();
};

/// Box projected Levenberg-Marquardt on the 2-norm of the objective.
LocalFit levenberg_marquardt(const OrbitObjective& obj, Vec t0, const Vec& lo, const Vec& hi,
                             double target, long budget) {
  const int n = int(t0.size());
  auto clamp = [&](Vec t) {
    for (int i = 0; i < n; ++i) t[i] = std::clamp(t[i], lo[i], hi[i]);
    return t;
  };

  LocalFit best;
  Vec t = clamp(std::move(t0));
  Vec r = obj.residual(t);
  double rn = r.norm();
  best = {t, rn};

  double damping = 1e-3;
  const long start_evals = obj.evals;
  while (rn > target && obj.evals - start_evals < budget && damping < 1e12) {
    Mat jac(r.size(), n);
    for (int j = 0; j < n; ++j) {
      Vec tp = t, tm = t;
      tp[j] += kJacStep;
      tm[j] -= kJacStep;
      jac.col(j) = (obj.residual(tp) - obj.residual(tm)) / (2 * kJacStep);
    }
    Mat jtj = jac.transpose() * jac;
    Vec jtr = jac.transpose() * r;
    Vec step = (jtj + damping * Mat::Identity(n, n)).ldlt().solve(-jtr);
    Vec cand = clamp(t + step);
    Vec rc = obj.residual(cand);
    double rcn = rc.norm();
    if (rcn < rn) {
      t = cand;
      r = rc;
      rn = rcn;
      damping = std::max(1e-12, damping * 0.3);
      if (rn < best.norm) best = {t, rn};
    } else {
      damping *= 2.5;
    }
    if (step.norm() < 1e-15) break; // stationary, no direction left to try
  }
  return best;
}

Mat presymplectic_numeric(const LieAlgebra& L, const RealizationCocycle* xi, const Vec& nu) {
  const int n = L.dim();
  Mat w = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = xi ? rat_d(xi->gamma0.at(i, j)) : 0.0;
      for (int k = 0; k < n; ++k) s += nu[k] * rat_d(L.c(i, j, k));
      w(i, j) = s;
    }
  return w;
}

} // namespace

InvariantProfile orbit_invariants(const GroupRealization& G, const RealizationCocycle* xi,
                                  const RatVec& mu) {
  if (int(mu.size()) != G.dim())
    throw DimensionMismatch("functional has size " + std::to_string(mu.size()) +
                            ", realization has dimension " + std::to_string(G.dim()));
  InvariantProfile profile;
  std::optional<CocycleMatrix> gamma;
  if (xi) gamma = xi->gamma0;
  PresymplecticForm form = presymplectic_matrix(G.algebra, mu, gamma);
  profile.omega_rank = form.rank;
  if (!xi)
    for (const CatalogInvariant& inv : G.invariants)
      profile.casimirs.emplace_back(inv.name, inv.eval(mu));
  return profile;
}

OrbitVerdict same_orbit(const GroupRealization& G, const RealizationCocycle* xi,
                        const RatVec& mu1, const RatVec& mu2, const SearchParams& params) {
  OrbitVerdict verdict;
  verdict.note = G.note;

  // exact screen: congruence invariants of both points must agree
  InvariantProfile p1 = orbit_invariants(G, xi, mu1);
  InvariantProfile p2 = orbit_invariants(G, xi, mu2);
  if (p1.omega_rank != p2.omega_rank) {
    verdict.status = OrbitStatus::Distinct;
    verdict.separating_invariant = "omega-rank";
    return verdict;
  }
  for (size_t k = 0; k < p1.casimirs.size(); ++k) {
    double a = rat_d(p1.casimirs[k].second), b = rat_d(p2.casimirs[k].second);
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    if (std::abs(a - b) > 1e-6 * scale) {
      verdict.status = OrbitStatus::Distinct;
      verdict.separating_invariant = p1.casimirs[k].first;
      return verdict;
    }
  }

  // numerical search for a witness
  const int n = G.dim();
  OrbitObjective obj{G, xi, ratvec_to_vec(mu1), ratvec_to_vec(mu2)};
  double best = std::numeric_limits<double>::infinity();
  Vec best_t = Vec::Zero(n);
  for (int restart = 0; restart < params.restarts; ++restart) {
    Vec t0 = Vec::Zero(n); // restart 0 probes the identity
    if (restart > 0) {
      uint64_t index = params.seed + uint64_t(restart);
      for (int i = 0; i < n; ++i)
        t0[i] = G.lo[i] + halton(index, kPrimes[i % 12]) * (G.hi[i] - G.lo[i]);
    }
    LocalFit fit = levenberg_marquardt(obj, t0, G.lo, G.hi, params.tol * 0.1, params.budget);
    if (fit.norm < best) {
      best = fit.norm;
      best_t = fit.t;
    }
    if (best <= params.tol * 0.1) break;
  }

  verdict.residual = best;
  if (best <= params.tol) {
    verdict.status = OrbitStatus::Equivalent;
    verdict.witness = best_t;
  } else {
    verdict.status = OrbitStatus::Inconclusive;
  }
  return verdict;
}

OrbitVerdict pseudo_class_equivalent(const GroupRealization& G, const RealizationCocycle* base_xi,
                                     const RatVec& l0a, const RatVec& l0b,
                                     const SearchParams& params) {
  return same_orbit(G, base_xi, l0a, l0b, params);
}

double symplectomorphism_witness_check(const GroupRealization& G, const RealizationCocycle* xi,
                                       const RatVec& mu_to, const RatVec& mu_from, const Vec& t) {
  if (int(mu_to.size()) != G.dim() || int(mu_from.size()) != G.dim())
    throw DimensionMismatch("functionals must match the realization dimension");
  if (int(t.size()) != G.dim())
    throw DimensionMismatch("witness parameters must match the realization dimension");

  Vec from = ratvec_to_vec(mu_from), to = ratvec_to_vec(mu_to);
  Vec moved = G.coad_of_params(t) * from;
  if (xi) moved += noether_of_params(G, *xi, t);
  double point_gap = (moved - to).cwiseAbs().maxCoeff();

  // Conjugated presymplectic matrix of the source vs the target's. The
  // witness may sit where the chart cannot express h(t) as one coordinate
  // tuple, so Ad(h^-1) is assembled from the axis factors in reverse.
  const int n = G.dim();
  Mat adinv = Mat::Identity(n, n);
  for (int i = n - 1; i >= 0; --i) {
    Vec e = Vec::Zero(n);
    e[i] = 1.0;
    adinv *= G.ad(G.exp_one_param(e, -t[i]));
  }
  Mat pulled = adinv.transpose() * presymplectic_numeric(G.algebra, xi, from) * adinv;
  Mat target = presymplectic_numeric(G.algebra, xi, to);
  double form_gap = (pulled - target).cwiseAbs().maxCoeff();

  return std::max(point_gap, form_gap);
}

} // namespace lieco
