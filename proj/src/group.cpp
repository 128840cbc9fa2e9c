#include "lieco/group.hpp"

#include <algorithm>
#include <cmath>

namespace lieco {

namespace {

constexpr double kFdStep = 1e-6;

Vec ratvec_to_vec(const RatVec& v) {
  Vec out(Eigen::Index(v.size()));
  for (size_t i = 0; i < v.size(); ++i) out[Eigen::Index(i)] = rat_d(v[i]);
  return out;
}

// structure constants as doubles, antisymmetric completion applied
double cd(const LieAlgebra& L, int i, int j, int k) { return rat_d(L.c(i, j, k)); }

Mat omega_numeric(const LieAlgebra& L, const Vec& nu) {
  const int n = L.dim();
  Mat w = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0;
      for (int k = 0; k < n; ++k) s += nu[k] * cd(L, i, j, k);
      w(i, j) = s;
    }
  return w;
}

} // namespace

Mat GroupRealization::coad(const Vec& g) const { return ad(inverse(g)).transpose(); }

Mat GroupRealization::ad_of_params(const Vec& t) const {
  const int n = dim();
  Mat a = Mat::Identity(n, n);
  if (ad_of_params_override) return ad_of_params_override(t);
  for (int i = 0; i < n; ++i) {
    Vec x = Vec::Zero(n);
    x[i] = 1.0;
    a = a * ad(exp_one_param(x, t[i]));
  }
  return a;
}

Mat GroupRealization::coad_of_params(const Vec& t) const {
  const int n = dim();
  Mat c = Mat::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    Vec x = Vec::Zero(n);
    x[i] = 1.0;
    if (ad_of_params_override) {
      Vec ti = Vec::Zero(n);
      ti[i] = t[i];
      c = c * ad_of_params_override(ti).inverse().transpose();
    } else {
      Vec gi = exp_one_param(x, t[i]);
      c = c * coad(gi);
    }
  }
  return c;
}

Vec GroupRealization::element_of_params(const Vec& t) const {
  if (element_of_params_override) return element_of_params_override(t);
  const int n = dim();
  Vec g = identity();
  for (int i = 0; i < n; ++i) {
    Vec x = Vec::Zero(n);
    x[i] = 1.0;
    g = law(g, exp_one_param(x, t[i]));
  }
  return g;
}

const RealizationCocycle* GroupRealization::find_cocycle(const std::string& cname) const {
  for (const RealizationCocycle& c : cocycles)
    if (c.name == cname) return &c;
  return nullptr;
}

const RealizationCocycle& GroupRealization::cocycle(const std::string& cname) const {
  if (const RealizationCocycle* c = find_cocycle(cname)) return *c;
  throw UnknownName("realization " + name + " has no cocycle named " + cname);
}

Mat left_invariant_frame(const GroupRealization& G, const Vec& g) {
  const int n = G.dim();
  Mat frame(n, n);
  for (int i = 0; i < n; ++i) {
    Vec hp = G.identity(), hm = G.identity();
    hp[i] = kFdStep;
    hm[i] = -kFdStep;
    Vec col = (G.law(g, hp) - G.law(g, hm)) / (2 * kFdStep);
    frame.col(i) = col;
  }
  return frame;
}

Mat right_invariant_frame(const GroupRealization& G, const Vec& g) {
  const int n = G.dim();
  Mat frame(n, n);
  for (int i = 0; i < n; ++i) {
    Vec hp = G.identity(), hm = G.identity();
    hp[i] = kFdStep;
    hm[i] = -kFdStep;
    frame.col(i) = (G.law(hp, g) - G.law(hm, g)) / (2 * kFdStep);
  }
  return frame;
}

namespace {

template <typename Value, typename Cochain, typename Act>
Value coboundary_impl(const GroupRealization& G, int degree, const Cochain& c,
                      std::span<const Vec> args, const Act& act, const Value& /*tag*/) {
  if (degree < 0 || degree > 3)
    throw UnsupportedDegree("coboundary implemented for degrees 0..3, got " +
                            std::to_string(degree));
  if (int(args.size()) != degree + 1)
    throw DimensionMismatch("a degree " + std::to_string(degree) + " coboundary takes " +
                            std::to_string(degree + 1) + " group elements");

  std::vector<Vec> tail(args.begin() + 1, args.end());
  Value out = act(args[0], c(std::span<const Vec>(tail)));

  double sign = -1.0;
  std::vector<Vec> merged(args.size() - 1);
  for (int i = 0; i < degree; ++i) {
    int m = 0;
    for (int j = 0; j < int(args.size()); ++j) {
      if (j == i) {
        merged[m++] = G.law(args[i], args[i + 1]);
        ++j; // consumed both
      } else {
        merged[m++] = args[j];
      }
    }
    out += sign * c(std::span<const Vec>(merged));
    sign = -sign;
  }

  std::vector<Vec> head(args.begin(), args.end() - 1);
  out += sign * c(std::span<const Vec>(head));
  return out;
}

} // namespace

double group_coboundary(const GroupRealization& G, ActionSpec action, int degree,
                        const RealCochain& c, std::span<const Vec> args) {
  if (action != ActionSpec::TrivialReal)
    throw DimensionMismatch("real-valued cochains only carry the trivial action");
  auto act = [](const Vec&, double v) { return v; };
  return coboundary_impl(G, degree, c, args, act, 0.0);
}

Vec group_coboundary(const GroupRealization& G, ActionSpec action, int degree,
                     const DualCochain& c, std::span<const Vec> args) {
  if (action != ActionSpec::CoadDual)
    throw DimensionMismatch("dual-valued cochains carry the coadjoint action");
  auto act = [&G](const Vec& g, const Vec& v) -> Vec { return G.coad(g) * v; };
  Vec tag = Vec::Zero(G.dim());
  return coboundary_impl(G, degree, c, args, act, tag);
}

double coboundary_from_lambda(const GroupRealization& G,
                              const std::function<double(const Vec&)>& lambda,
                              const Vec& g1, const Vec& g2) {
  return lambda(G.law(g1, g2)) - lambda(g1) - lambda(g2);
}

Vec lambda_gradient(const GroupRealization& G, const std::function<double(const Vec&)>& lambda) {
  const int n = G.dim();
  Vec grad(n);
  for (int i = 0; i < n; ++i) {
    Vec hp = G.identity(), hm = G.identity();
    hp[i] = kFdStep;
    hm[i] = -kFdStep;
    grad[i] = (lambda(hp) - lambda(hm)) / (2 * kFdStep);
  }
  return grad;
}

ThetaEvaluation theta_at(const GroupRealization& G, const RealizationCocycle& xi, const Vec& g) {
  const int n = G.dim();
  ThetaEvaluation out;
  out.dual_components = Vec(n);
  Vec ginv = G.inverse(g);
  for (int i = 0; i < n; ++i) {
    Vec gp = g, gm = g;
    gp[i] += kFdStep;
    gm[i] -= kFdStep;
    out.dual_components[i] = (xi.xi(ginv, gp) - xi.xi(ginv, gm)) / (2 * kFdStep);
  }
  out.phase_component = 1.0;
  return out;
}

Vec noether_invariants(const GroupRealization& G, const RealizationCocycle& xi, const Vec& g) {
  const int n = G.dim();
  // phase rate of the right invariant extended field: d xi(h, g)/dh at h = e
  Vec phase_rate(n);
  for (int i = 0; i < n; ++i) {
    Vec hp = G.identity(), hm = G.identity();
    hp[i] = kFdStep;
    hm[i] = -kFdStep;
    phase_rate[i] = (xi.xi(hp, g) - xi.xi(hm, g)) / (2 * kFdStep);
  }
  ThetaEvaluation th = theta_at(G, xi, g);
  Mat rframe = right_invariant_frame(G, g);
  Vec f(n);
  for (int i = 0; i < n; ++i) f[i] = phase_rate[i] + th.dual_components.dot(rframe.col(i));
  return f;
}

Vec noether_of_params(const GroupRealization& G, const RealizationCocycle& xi, const Vec& t) {
  const int n = G.dim();
  if (t.size() != n) throw DimensionMismatch("noether_of_params: parameter count");
  if (xi.lambda0.size() > 0) {
    // xi = delta lambda, so F(h) = Coad(h) l0 - l0 with no coordinates of h.
    Vec l0 = ratvec_to_vec(xi.lambda0);
    return G.coad_of_params(t) * l0 - l0;
  }
  // True cocycle: F(h1 h2) = F(h1) + Coad(h1) F(h2), folded over the axis
  // factors h_i = exp(t_i X_i) whose coordinates are known without extraction.
  Vec f = Vec::Zero(n);
  Mat prefix = Mat::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    Vec e = Vec::Zero(n);
    e[i] = 1.0;
    Vec gi = G.exp_one_param(e, t[i]);
    f += prefix * noether_invariants(G, xi, gi);
    Vec ti = Vec::Zero(n);
    ti[i] = t[i];
    prefix *= G.coad_of_params(ti);
  }
  return f;
}

Mat noether_differential(const GroupRealization& G, const RealizationCocycle& xi) {
  const int n = G.dim();
  // F itself is a central difference, so the outer step is kept two orders
  // wider: dividing the inner FD noise by 1e-6 again would eat the budget.
  const double kOuter = 1e-3;
  Mat d(n, n); // d(i, j) = dF_i / dg^j at e
  for (int j = 0; j < n; ++j) {
    Vec gp = G.identity(), gm = G.identity();
    gp[j] = kOuter;
    gm[j] = -kOuter;
    Vec fp = noether_invariants(G, xi, gp);
    Vec fm = noether_invariants(G, xi, gm);
    d.col(j) = (fp - fm) / (2 * kOuter);
  }
  return d;
}

std::pair<Vec, double> extended_coadjoint(const GroupRealization& G, const RealizationCocycle& xi,
                                          const Vec& g, const Vec& mu, double mu_zeta) {
  Vec out = G.coad(g) * mu + mu_zeta * noether_invariants(G, xi, g);
  return {out, mu_zeta};
}

Vec symplectic_coboundary_of_lambda(const GroupRealization& G, const Vec& l0, const Vec& g) {
  return G.coad(g) * l0 - l0;
}

double ad_equivariance_residual(const GroupRealization& G, const RatVec& l0, const Vec& g) {
  const LieAlgebra& L = G.algebra;
  Mat w0 = omega_numeric(L, ratvec_to_vec(l0));
  Mat adinv = G.ad(G.inverse(g));
  Mat lhs = adinv.transpose() * w0 * adinv;
  Vec nu = G.coad(g) * ratvec_to_vec(l0);
  Mat rhs = omega_numeric(L, nu);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

Vec sample_point(const GroupRealization& G, std::mt19937_64& rng) {
  const int n = G.dim();
  Vec g(n);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < n; ++i) g[i] = G.sample_lo[i] + u(rng) * (G.sample_hi[i] - G.sample_lo[i]);
  return g;
}

namespace {

// sampling helper that retries when a product leaves the chart
template <typename Fn>
double worst_over_samples(const GroupRealization&, int samples, std::mt19937_64& rng, Fn&& fn) {
  double worst = 0.0;
  int produced = 0;
  int guard = 0;
  while (produced < samples && guard < samples * 20 + 100) {
    ++guard;
    try {
      worst = std::max(worst, fn(rng));
      ++produced;
    } catch (const ChartOverflow&) {
      continue;
    }
  }
  return worst;
}

Mat gamma0_numeric(const RealizationCocycle& c) {
  const RatMat& g = c.gamma0;
  Mat m(g.rows(), g.cols());
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) m(i, j) = rat_d(g.at(i, j));
  return m;
}

} // namespace

VerifyReport group_verify(const GroupRealization& G, int samples, uint64_t seed) {
  VerifyReport report;
  std::mt19937_64 rng(seed);
  const int n = G.dim();

  auto push = [&report](const std::string& check, double worst, double tol) {
    report.lines.push_back({check, worst, tol, worst <= tol});
    if (worst > tol) report.ok = false;
  };

  push("law-identity", worst_over_samples(G, samples, rng, [&](std::mt19937_64& r) {
         Vec g = sample_point(G, r);
         double a = (G.law(G.identity(), g) - g).cwiseAbs().maxCoeff();
         double b = (G.law(g, G.identity()) - g).cwiseAbs().maxCoeff();
         return std::max(a, b);
       }),
       1e-12);

  push("law-inverse", worst_over_samples(G, samples, rng, [&](std::mt19937_64& r) {
         Vec g = sample_point(G, r);
         double a = G.law(G.inverse(g), g).cwiseAbs().maxCoeff();
         double b = G.law(g, G.inverse(g)).cwiseAbs().maxCoeff();
         return std::max(a, b);
       }),
       1e-12);

  push("ad-homomorphism", worst_over_samples(G, samples, rng, [&](std::mt19937_64& r) {
         Vec g1 = sample_point(G, r), g2 = sample_point(G, r);
         Mat lhs = G.ad(G.law(g1, g2));
         Mat rhs = G.ad(g1) * G.ad(g2);
         return (lhs - rhs).cwiseAbs().maxCoeff();
       }),
       1e-9);

  push("exp-tangent", [&] {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      Vec x = Vec::Zero(n);
      x[i] = 1.0;
      Vec d = (G.exp_one_param(x, kFdStep) - G.exp_one_param(x, -kFdStep)) / (2 * kFdStep);
      worst = std::max(worst, (d - x).cwiseAbs().maxCoeff());
    }
    return worst;
  }(),
       1e-6);

  // Ad of one-parameter subgroups reproduces the declared brackets.
  push("ad-bracket", [&] {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      Vec x = Vec::Zero(n);
      x[i] = 1.0;
      Mat dp = G.ad(G.exp_one_param(x, kFdStep));
      Mat dm = G.ad(G.exp_one_param(x, -kFdStep));
      Mat d = (dp - dm) / (2 * kFdStep);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) worst = std::max(worst, std::abs(d(k, j) - cd(G.algebra, i, j, k)));
    }
    return worst;
  }(),
       1e-6);

  for (const RealizationCocycle& c : G.cocycles) {
    push("xi-normalized[" + c.name + "]",
         worst_over_samples(G, samples, rng, [&](std::mt19937_64& r) {
           Vec g = sample_point(G, r);
           return std::max(std::abs(c.xi(G.identity(), g)), std::abs(c.xi(g, G.identity())));
         }),
         1e-12);

    push("xi-cocycle[" + c.name + "]",
         worst_over_samples(G, samples, rng, [&](std::mt19937_64& r) {
           Vec g1 = sample_point(G, r), g2 = sample_point(G, r), g3 = sample_point(G, r);
           std::vector<Vec> args = {g1, g2, g3};
           RealCochain two = [&c](std::span<const Vec> a) { return c.xi(a[0], a[1]); };
           return std::abs(group_coboundary(G, ActionSpec::TrivialReal, 2, two, args));
         }),
         1e-8);

    // mixed second derivative antisymmetrization of xi at (e, e); the wider
    // step keeps the 1/h^2 factor from amplifying evaluation noise
    push("gamma0-second-derivative[" + c.name + "]", [&] {
      const double h2 = 1e-4;
      Mat mixed(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Vec ap = G.identity(), am = G.identity(), bp = G.identity(), bm = G.identity();
          ap[i] = h2;
          am[i] = -h2;
          bp[j] = h2;
          bm[j] = -h2;
          mixed(i, j) = (c.xi(ap, bp) - c.xi(ap, bm) - c.xi(am, bp) + c.xi(am, bm)) / (4 * h2 * h2);
        }
      Mat anti = mixed - mixed.transpose();
      return (anti - gamma0_numeric(c)).cwiseAbs().maxCoeff();
    }(),
         1e-6);

    if (c.lambda) {
      push("lambda-coboundary[" + c.name + "]",
           worst_over_samples(G, samples, rng, [&](std::mt19937_64& r) {
             Vec g1 = sample_point(G, r), g2 = sample_point(G, r);
             return std::abs(c.xi(g1, g2) - coboundary_from_lambda(G, c.lambda, g1, g2));
           }),
           1e-8);
      Vec grad = lambda_gradient(G, c.lambda);
      double worst = 0.0;
      for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(grad[i] - rat_d(c.lambda0[i])));
      push("lambda-gradient[" + c.name + "]", worst, 1e-6);
    }

    push("noether-cocycle[" + c.name + "]",
         worst_over_samples(G, samples, rng, [&](std::mt19937_64& r) {
           Vec g1 = sample_point(G, r), g2 = sample_point(G, r);
           Vec lhs = noether_invariants(G, c, G.law(g1, g2));
           Vec rhs = G.coad(g1) * noether_invariants(G, c, g2) + noether_invariants(G, c, g1);
           return (lhs - rhs).cwiseAbs().maxCoeff();
         }),
         1e-8);

    push("noether-of-params[" + c.name + "]",
         worst_over_samples(G, samples, rng, [&](std::mt19937_64& r) {
           Vec t = sample_point(G, r);
           Vec direct = noether_invariants(G, c, G.element_of_params(t));
           return (noether_of_params(G, c, t) - direct).cwiseAbs().maxCoeff();
         }),
         1e-7);

    push("noether-differential[" + c.name + "]", [&] {
      Mat d = noether_differential(G, c);
      Mat g0 = gamma0_numeric(c);
      double scale = std::max(1.0, g0.cwiseAbs().maxCoeff());
      double worst = (d - g0).cwiseAbs().maxCoeff() / scale;
      worst = std::max(worst, (d + d.transpose()).cwiseAbs().maxCoeff() / scale);
      return worst;
    }(),
         1e-4);
  }

  // nilpotency of the coboundary on smooth 1-cochains, both value spaces
  {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int count = std::max(1, samples / 2);
    double worst_r = 0.0, worst_d = 0.0;
    for (int s = 0; s < count; ++s) {
      Vec a(n), b(n);
      Mat q(n, n);
      for (int i = 0; i < n; ++i) {
        a[i] = u(rng);
        b[i] = u(rng);
        for (int j = 0; j < n; ++j) q(i, j) = 0.5 * u(rng);
      }
      RealCochain one_r = [&](std::span<const Vec> args) {
        const Vec& g = args[0];
        return a.dot(g) + g.dot(q * g);
      };
      DualCochain one_d = [&](std::span<const Vec> args) -> Vec {
        const Vec& g = args[0];
        return a * (b.dot(g)) + q * g;
      };
      try {
        Vec g1 = sample_point(G, rng), g2 = sample_point(G, rng), g3 = sample_point(G, rng);
        std::vector<Vec> triple = {g1, g2, g3};
        RealCochain two_r = [&](std::span<const Vec> args) {
          std::vector<Vec> pair(args.begin(), args.end());
          return group_coboundary(G, ActionSpec::TrivialReal, 1, one_r, pair);
        };
        DualCochain two_d = [&](std::span<const Vec> args) -> Vec {
          std::vector<Vec> pair(args.begin(), args.end());
          return group_coboundary(G, ActionSpec::CoadDual, 1, one_d, pair);
        };
        worst_r = std::max(worst_r,
                           std::abs(group_coboundary(G, ActionSpec::TrivialReal, 2, two_r, triple)));
        worst_d = std::max(worst_d, group_coboundary(G, ActionSpec::CoadDual, 2, two_d, triple)
                                        .cwiseAbs()
                                        .maxCoeff());
      } catch (const ChartOverflow&) {
        --s;
        continue;
      }
    }
    push("coboundary-nilpotency-real", worst_r, 1e-8);
    push("coboundary-nilpotency-dual", worst_d, 1e-8);
  }

  push("ad-equivariance", worst_over_samples(G, samples, rng, [&](std::mt19937_64& r) {
         Vec g = sample_point(G, r);
         std::uniform_int_distribution<int> num(-4, 4);
         RatVec l0(n);
         for (int i = 0; i < n; ++i) {
           l0[i] = Rat(num(r), 2);
           l0[i].canonicalize();
         }
         return ad_equivariance_residual(G, l0, g);
       }),
       1e-9);

  if (!G.invariants.empty()) {
    push("invariant-flow", worst_over_samples(G, samples, rng, [&](std::mt19937_64& r) {
           std::uniform_real_distribution<double> u(-1.0, 1.0);
           Vec mu(n), x(n);
           for (int i = 0; i < n; ++i) {
             mu[i] = u(r);
             x[i] = u(r);
           }
           double worst = 0.0;
           for (const CatalogInvariant& inv : G.invariants) {
             RatVec mu_r(n);
             for (int i = 0; i < n; ++i) mu_r[i] = Rat(mu[i]);
             double base = rat_d(inv.eval(mu_r));
             for (int step = 1; step <= 4; ++step) {
               Vec moved = G.coad(G.exp_one_param(x, 0.2 * step)) * mu;
               RatVec moved_r(n);
               for (int i = 0; i < n; ++i) moved_r[i] = Rat(moved[i]);
               double val = rat_d(inv.eval(moved_r));
               worst = std::max(worst, std::abs(val - base) / std::max(1.0, std::abs(base)));
             }
           }
           return worst;
         }),
         1e-6);
  }

  // theta gains lambda0 . thetaL - d lambda when xi gains the coboundary of lambda
  if (!G.cocycles.empty()) {
    const RealizationCocycle& base = G.cocycles.front();
    auto lam = [n](const Vec& g) {
      double v = 0.0;
      for (int i = 0; i < n; ++i) v += (0.1 + 0.03 * i) * g[i] + 0.04 * g[i] * g[(i + 1) % n];
      return v;
    };
    RealizationCocycle shifted = base;
    shifted.name = base.name + "+dlam";
    auto base_xi = base.xi;
    auto law = G.law;
    shifted.xi = [base_xi, lam, law](const Vec& g1, const Vec& g2) {
      return base_xi(g1, g2) + lam(law(g1, g2)) - lam(g1) - lam(g2);
    };
    Vec l0 = lambda_gradient(G, lam);
    push("theta-additivity", worst_over_samples(G, std::max(1, samples / 4), rng,
                                                [&](std::mt19937_64& r) {
           Vec g = sample_point(G, r);
           Vec lhs = theta_at(G, shifted, g).dual_components;
           Mat lframe = left_invariant_frame(G, g);
           Mat linv = lframe.inverse();
           Vec grad(n);
           for (int i = 0; i < n; ++i) {
             Vec gp = g, gm = g;
             gp[i] += kFdStep;
             gm[i] -= kFdStep;
             grad[i] = (lam(gp) - lam(gm)) / (2 * kFdStep);
           }
           Vec rhs = theta_at(G, base, g).dual_components + linv.transpose() * l0 - grad;
           return (lhs - rhs).cwiseAbs().maxCoeff();
         }),
         1e-6);
  }

  return report;
}

} // namespace lieco
