// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit on any
// failure. Usage: lieco_acceptance <path-to-lieco-cli> <data-dir>

#include "lieco/cohomology.hpp"
#include "lieco/group.hpp"
#include "lieco/io.hpp"
#include "lieco/orbit.hpp"
#include "lieco/symplectic.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace lieco;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s  criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
              detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RatVec rand_rat_vec(int n, std::mt19937_64& rng, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 3);
  RatVec v(n);
  for (Rat& x : v) {
    x = Rat(num(rng), den(rng));
    x.canonicalize();
  }
  return v;
}

Vec rand_vec(int n, std::mt19937_64& rng, double span = 2.0) {
  std::uniform_real_distribution<double> u(-span, span);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = u(rng);
  return v;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// --- criterion 1: cohomology dimensions ------------------------------------

void criterion_1() {
  struct Row {
    const char* name;
    int h2;
  };
  const Row rows[] = {{"galilei11", 2}, {"heisenberg1", 2}, {"su2", 0},
                      {"sl2r", 0},      {"poincare11", 1},  {"abelian2", 1}};
  bool ok = true;
  double slowest = 0.0;
  std::string got;
  for (const Row& row : rows) {
    auto t0 = std::chrono::steady_clock::now();
    H2Report rep = h2_report(catalog_find(row.name)->algebra);
    double dt = seconds_since(t0);
    slowest = std::max(slowest, dt);
    ok = ok && rep.h2_dim == row.h2 && dt < 1.0;
    got += std::string(row.name) + "=" + std::to_string(rep.h2_dim) + " ";
  }
  report(1, ok, "cohomology dimensions of the six catalog algebras",
         got + "slowest " + fmt(slowest) + "s");
}

// --- criterion 2: cohomology generation under contraction ------------------

void criterion_2() {
  const LieAlgebra& poi = catalog_find("poincare11")->algebra;
  CocycleMatrix gamma(3, 3);
  gamma.at(1, 2) = 1;
  gamma.at(2, 1) = -1;

  DecomposeResult before = h2_decompose(poi, gamma);
  ContractionResult contracted = iw_contraction(poi, {poi.index_of("H")}, gamma, 2);
  bool shape_ok = contracted.algebra.same_table(catalog_find("galilei11")->algebra);
  bool survived = contracted.gamma.has_value() && !contracted.gamma->is_zero();
  DecomposeResult after = h2_decompose(contracted.algebra, *contracted.gamma);

  bool ok = before.trivial && shape_ok && survived && !after.trivial;
  report(2, ok, "an exact cocycle becomes a generator after contraction",
         std::string("before trivial=") + (before.trivial ? "yes" : "no") +
             ", after trivial=" + (after.trivial ? "yes" : "no") + ", exact arithmetic");
}

// --- criterion 3: group coboundary nilpotency -------------------------------

void criterion_3() {
  std::mt19937_64 rng(0xACCE97ED);
  double worst = 0.0;
  for (const char* name : {"abelian2", "galilei11"}) {
    auto G = catalog_find(name);
    const int n = G->dim();
    for (int trial = 0; trial < 500; ++trial) {
      Vec a = rand_vec(n, rng, 0.5), b = rand_vec(n, rng, 0.3);
      RealCochain c = [&](std::span<const Vec> xs) {
        const Vec& x = xs[0];
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += a[i] * x[i] + b[i] * x[i] * x[(i + 1) % n];
        return s;
      };
      RealCochain dc = [&](std::span<const Vec> xs) {
        return group_coboundary(*G, ActionSpec::TrivialReal, 1, c, xs);
      };
      DualCochain cv = [&](std::span<const Vec> xs) {
        const Vec& x = xs[0];
        Vec out(n);
        for (int i = 0; i < n; ++i) out[i] = a[i] * x[(i + 2) % n] + b[i] * x[i] * x[i];
        return out;
      };
      DualCochain dcv = [&](std::span<const Vec> xs) {
        return group_coboundary(*G, ActionSpec::CoadDual, 1, cv, xs);
      };
      std::vector<Vec> triple{sample_point(*G, rng), sample_point(*G, rng),
                              sample_point(*G, rng)};
      worst = std::max(worst, std::abs(group_coboundary(*G, ActionSpec::TrivialReal, 2, dc, triple)));
      worst = std::max(worst,
                       group_coboundary(*G, ActionSpec::CoadDual, 2, dcv, triple).cwiseAbs().maxCoeff());
    }
  }
  report(3, worst < 1e-8, "coboundary of a coboundary vanishes, both actions",
         "500 random cochain/triple draws per realization, worst " + fmt(worst));
}

// --- criterion 4: Noether charges form a 1-cocycle --------------------------

void criterion_4() {
  std::mt19937_64 rng(0xACCE97EE);
  double worst_pair = 0.0, worst_anti = 0.0;
  for (const auto& G : catalog()) {
    for (const RealizationCocycle& c : G->cocycles) {
      for (int trial = 0; trial < 1000; ++trial) {
        Vec g1 = sample_point(*G, rng), g2 = sample_point(*G, rng);
        Vec lhs = noether_invariants(*G, c, G->law(g1, g2));
        Vec rhs = G->coad(g1) * noether_invariants(*G, c, g2) + noether_invariants(*G, c, g1);
        worst_pair = std::max(worst_pair, (lhs - rhs).cwiseAbs().maxCoeff());
      }
      Mat d = noether_differential(*G, c);
      worst_anti = std::max(worst_anti, (d + d.transpose()).cwiseAbs().maxCoeff());
    }
  }
  report(4, worst_pair < 1e-8 && worst_anti < 1e-4,
         "charge cocycle identity and antisymmetric differential",
         "1000 pairs per cocycle, worst " + fmt(worst_pair) + "; antisymmetry " + fmt(worst_anti));
}

// --- criterion 5: the charge differential is the declared algebra cocycle ---

void criterion_5() {
  double worst = 0.0;
  for (const auto& G : catalog()) {
    for (const RealizationCocycle& c : G->cocycles) {
      Mat d = noether_differential(*G, c);
      Mat g0(G->dim(), G->dim());
      for (int i = 0; i < G->dim(); ++i)
        for (int j = 0; j < G->dim(); ++j) g0(i, j) = rat_d(c.gamma0.at(i, j));
      double scale = std::max(1.0, g0.cwiseAbs().maxCoeff());
      worst = std::max(worst, (d - g0).cwiseAbs().maxCoeff() / scale);
    }
  }
  report(5, worst < 1e-4, "finite-difference charge differential matches gamma0",
         "entrywise relative error, worst " + fmt(worst));
}

// --- criterion 6: equivariance of the presymplectic form --------------------

void criterion_6() {
  std::mt19937_64 rng(0xACCE97EF);
  double worst = 0.0;
  for (const char* name : {"su2", "abelian2"}) {
    auto G = catalog_find(name);
    for (int trial = 0; trial < 500; ++trial) {
      RatVec l0 = rand_rat_vec(G->dim(), rng, 4);
      worst = std::max(worst, ad_equivariance_residual(*G, l0, sample_point(*G, rng)));
    }
  }
  report(6, worst < 1e-9, "conjugated form equals the form at the moved point",
         "500 samples each on su2 and abelian2, worst " + fmt(worst));
}

// --- criterion 7: orbit classification on su2 -------------------------------

void criterion_7() {
  auto t0 = std::chrono::steady_clock::now();
  auto su2 = catalog_find("su2");
  RatVec north{Rat(0), Rat(0), Rat(1)}, east{Rat(1), Rat(0), Rat(0)},
      north2{Rat(0), Rat(0), Rat(2)};

  OrbitVerdict eq = same_orbit(*su2, nullptr, north, east, {});
  bool eq_ok = eq.status == OrbitStatus::Equivalent && eq.residual < 1e-8;

  OrbitVerdict refl = same_orbit(*su2, nullptr, north, north, {});
  bool refl_ok = refl.status == OrbitStatus::Equivalent;

  OrbitVerdict dist = same_orbit(*su2, nullptr, north, north2, {});
  bool dist_ok =
      dist.status == OrbitStatus::Distinct && dist.separating_invariant == "radius-squared";

  double worst_gap = 0.0;
  if (eq.witness)
    worst_gap = std::max(worst_gap,
                         symplectomorphism_witness_check(*su2, nullptr, east, north, *eq.witness));
  if (refl.witness)
    worst_gap = std::max(
        worst_gap, symplectomorphism_witness_check(*su2, nullptr, north, north, *refl.witness));
  double dt = seconds_since(t0);

  bool ok = eq_ok && refl_ok && dist_ok && worst_gap < 1e-7 && dt < 10.0;
  report(7, ok, "su2 sphere membership, separation, and witness audit",
         "residual " + fmt(eq.residual) + ", witness gap " + fmt(worst_gap) + ", " + fmt(dt) + "s");
}

// --- criterion 8: deformed classes collapse on the plane --------------------

void criterion_8() {
  auto ab = catalog_find("abelian2");
  const RealizationCocycle& weyl = ab->cocycle("weyl");
  RatVec a{Rat(1), Rat(0)}, b{Rat(0), Rat(1)};
  OrbitVerdict with = pseudo_class_equivalent(*ab, &weyl, a, b, {});
  OrbitVerdict without = pseudo_class_equivalent(*ab, nullptr, a, b, {});
  bool ok =
      with.status == OrbitStatus::Equivalent && without.status == OrbitStatus::Distinct;
  report(8, ok, "weyl deformation joins points the plain action separates",
         std::string("deformed=") + to_string(with.status) + ", plain=" +
             to_string(without.status));
}

// --- criterion 9: rank parity and kernel equality ----------------------------

void criterion_9() {
  std::mt19937_64 rng(0xACCE97F0);
  bool parity_ok = true, kernel_ok = true;
  for (const auto& G : catalog()) {
    const LieAlgebra& L = G->algebra;
    std::vector<CocycleMatrix> z2 = cocycle_space(L);
    for (int trial = 0; trial < 200; ++trial) {
      RatVec l0 = rand_rat_vec(L.dim(), rng);
      CocycleMatrix gamma(L.dim(), L.dim());
      RatVec coeff = rand_rat_vec(int(z2.size()), rng, 3);
      for (size_t k = 0; k < z2.size(); ++k) gamma = gamma + z2[k].scaled(coeff[k]);
      parity_ok = parity_ok && presymplectic_matrix(L, l0, gamma).rank % 2 == 0;

      // with no deformation, the kernel is exactly the coadjoint isotropy
      std::vector<RatVec> kernel = characteristic_subalgebra(L, l0);
      RatMat iso(L.dim(), L.dim());
      for (int i = 0; i < L.dim(); ++i) {
        RatVec e(L.dim(), Rat(0));
        e[i] = 1;
        CoalgebraVector moved = coad_apply(L, AlgebraVector(e), CoalgebraVector(l0));
        for (int r = 0; r < L.dim(); ++r) iso.at(r, i) = moved.c[r];
      }
      std::vector<RatVec> iso_kernel = iso.nullspace();
      kernel_ok = kernel_ok && same_span(kernel, iso_kernel);
    }
  }
  report(9, parity_ok && kernel_ok, "even ranks and kernel = isotropy (exact)",
         std::string("200 draws per algebra; parity ") + (parity_ok ? "ok" : "violated") +
             ", kernels " + (kernel_ok ? "match" : "differ"));
}

// --- criterion 10: integrality of the su2 pole data --------------------------

// series exponential with scaling and squaring, independent of the catalog
Eigen::Matrix2cd expm2(const Eigen::Matrix2cd& m) {
  double norm = m.cwiseAbs().maxCoeff();
  int squarings = 0;
  Eigen::Matrix2cd scaled = m;
  while (norm > 0.5) {
    scaled /= 2.0;
    norm /= 2.0;
    ++squarings;
  }
  Eigen::Matrix2cd sum = Eigen::Matrix2cd::Identity(), term = Eigen::Matrix2cd::Identity();
  for (int k = 1; k <= 24; ++k) {
    term = term * scaled / double(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

void criterion_10() {
  auto su2 = catalog_find("su2");
  const CompactGeneratorDatum& datum = su2->compact_data.at(0);

  // the declared period closes the loop; half of it does not
  const std::complex<double> I(0.0, 1.0);
  Eigen::Matrix2cd x3;
  x3 << -I / 2.0, 0.0, 0.0, I / 2.0;
  double full = (expm2(datum.period * x3) - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  double half =
      (expm2(datum.period / 2 * x3) - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  bool period_ok = full < 1e-9 && half > 1.0;

  bool accept_ok = true;
  for (int k = 1; k <= 3; ++k) {
    RatVec l0{Rat(0), Rat(0), Rat(k, 2)};
    accept_ok =
        accept_ok && integrality_check(su2->algebra, l0, su2->compact_data, 1e-9).integral;
  }
  bool reject_ok =
      !integrality_check(su2->algebra, {Rat(0), Rat(0), Rat(3, 10)}, su2->compact_data, 1e-9)
           .integral;

  report(10, period_ok && accept_ok && reject_ok,
         "half-integer poles quantize, 3/10 does not, period audited",
         "loop closure " + fmt(full) + ", half-period gap " + fmt(half));
}

// --- criterion 11: coboundary shifts act as translations ---------------------

void criterion_11() {
  std::mt19937_64 rng(0xACCE97F1);
  double worst = 0.0;
  for (const char* spec : {"abelian2:weyl", "galilei11:mass"}) {
    std::string s(spec);
    auto G = catalog_find(s.substr(0, s.find(':')));
    const RealizationCocycle& xi = G->cocycle(s.substr(s.find(':') + 1));
    const int n = G->dim();
    for (int trial = 0; trial < 200; ++trial) {
      Vec g = sample_point(*G, rng);
      Vec mu = rand_vec(n, rng), mu0 = rand_vec(n, rng);
      Vec lhs = extended_coadjoint(*G, xi, g, mu0, 1.0).first +
                symplectic_coboundary_of_lambda(*G, mu, g);
      Vec rhs = extended_coadjoint(*G, xi, g, mu0 + mu, 1.0).first - mu;
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  report(11, worst < 1e-8, "shifting the cocycle translates the orbits",
         "200 samples each on abelian2/weyl and galilei11/mass, worst " + fmt(worst));
}

// --- criterion 12: CLI reports are byte-deterministic ------------------------

std::string run_cli(const std::string& cmd, int& exit_code) {
  std::string out_path = std::string("/tmp/lieco_acc_") + std::to_string(getpid()) + ".out";
  int rc = std::system((cmd + " > " + out_path + " 2>/dev/null").c_str());
  exit_code = rc < 0 ? rc : WEXITSTATUS(rc);
  std::ifstream in(out_path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(out_path.c_str());
  return ss.str();
}

void criterion_12(const std::string& cli, const std::string& data) {
  const std::string commands[] = {
      "validate " + data + "/su2.alg --format json",
      "h2 " + data + "/galilei11.alg --format json",
      "extend galilei11 --cocycle " + data + "/galilei11_mass.coc --format json",
      "pseudo-extend poincare11 --l0 -1,0,0 --format json",
      "trivialize poincare11 --cocycle " + data + "/poincare11_rest-energy.coc --format json",
      "omega galilei11 --l0 0,0,0 --cocycle " + data + "/galilei11_mass.coc --format json",
      "char-sub su2 --l0 0,0,1 --format json",
      "orbit su2 --mu 0,0,1 --nu 1,0,0 --seed 42 --format json",
      "pseudo-class su2 --l0 0,0,1 --l0b 1,0,0 --seed 7 --format json",
      "witness-check su2 --mu 0,0,1 --nu 1,0,0 --witness 0,1.5707963267948966,0 --tol 1e-7"
      " --format json",
      "integrality su2 --l0 0,0,1/2 --tol 1e-9 --format json",
      "contract poincare11 --sub H --scale 2 --cocycle " + data +
          "/poincare11_rest-energy.coc --format json",
      "group-verify galilei11 --samples 120 --seed 42 --format json",
      "catalog --format json",
  };
  bool ok = true;
  int checked = 0;
  for (const std::string& args : commands) {
    int code1 = 0, code2 = 0;
    std::string first = run_cli(cli + " " + args, code1);
    std::string second = run_cli(cli + " " + args, code2);
    if (first.empty() || first != second || code1 != code2) {
      ok = false;
      std::fprintf(stderr, "  non-deterministic or empty: lieco %s\n", args.c_str());
    }
    ++checked;
  }
  report(12, ok, "every subcommand reproduces its report byte for byte",
         std::to_string(checked) + " commands, two runs each");
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s <lieco-cli> <data-dir>\n", argv[0]);
    return 2;
  }

  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12(argv[1], argv[2]);

  if (g_failures == 0)
    std::printf("all 12 criteria hold\n");
  else
    std::printf("%d criterion(s) FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
