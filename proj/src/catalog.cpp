#include "lieco/group.hpp"

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <sstream>

namespace lieco {

namespace {

using Cplx = std::complex<double>;
using Mat2c = Eigen::Matrix2cd;
using Mat2d = Eigen::Matrix2d;

constexpr double kChartEps = 1e-9;

Vec box(int n, double v) { return Vec::Constant(n, v); }

RatMat pair_form(int n, int i, int j, int val) {
  RatMat g(n, n);
  g.at(i, j) = val;
  g.at(j, i) = -val;
  return g;
}

// ---------------------------------------------------------------- abelian2

GroupRealization make_abelian2() {
  LieAlgebra L("abelian2", {"X1", "X2"});
  GroupRealization G;
  G.name = "abelian2";
  G.algebra = L;
  G.lo = box(2, -8);
  G.hi = box(2, 8);
  G.sample_lo = box(2, -1);
  G.sample_hi = box(2, 1);
  G.law = [](const Vec& g1, const Vec& g2) -> Vec { return g1 + g2; };
  G.inverse = [](const Vec& g) -> Vec { return -g; };
  G.ad = [](const Vec&) -> Mat { return Mat::Identity(2, 2); };
  G.exp_one_param = [](const Vec& x, double t) -> Vec { return t * x; };

  RealizationCocycle weyl;
  weyl.name = "weyl";
  weyl.xi = [](const Vec& g1, const Vec& g2) {
    return 0.5 * (g1[0] * g2[1] - g1[1] * g2[0]);
  };
  weyl.gamma0 = pair_form(2, 0, 1, 1);
  G.cocycles.push_back(weyl);

  G.invariants.push_back({"mu1", [](const RatVec& mu) -> Rat { return mu[0]; }});
  G.invariants.push_back({"mu2", [](const RatVec& mu) -> Rat { return mu[1]; }});
  return G;
}

// ------------------------------------------------------------- heisenberg1

GroupRealization make_heisenberg1() {
  LieAlgebra L("heisenberg1", {"X1", "X2", "X3"});
  L.set_bracket(0, 1, {Rat(0), Rat(0), Rat(1)}); // [X1, X2] = X3
  GroupRealization G;
  G.name = "heisenberg1";
  G.algebra = L;
  G.lo = box(3, -8);
  G.hi = box(3, 8);
  G.sample_lo = box(3, -1);
  G.sample_hi = box(3, 1);
  // coordinates (a, b, theta)
  G.law = [](const Vec& g1, const Vec& g2) -> Vec {
    Vec out(3);
    out[0] = g1[0] + g2[0];
    out[1] = g1[1] + g2[1];
    out[2] = g1[2] + g2[2] + 0.5 * (g1[0] * g2[1] - g1[1] * g2[0]);
    return out;
  };
  G.inverse = [](const Vec& g) -> Vec { return -g; };
  G.ad = [](const Vec& g) -> Mat {
    Mat a = Mat::Identity(3, 3);
    a(2, 0) = -g[1];
    a(2, 1) = g[0];
    return a;
  };
  G.exp_one_param = [](const Vec& x, double t) -> Vec { return t * x; };

  RealizationCocycle pull;
  pull.name = "weyl-pullback";
  pull.xi = [](const Vec& g1, const Vec& g2) {
    return 0.5 * (g1[0] * g2[1] - g1[1] * g2[0]);
  };
  pull.lambda = [](const Vec& g) { return g[2]; };
  pull.lambda0 = {Rat(0), Rat(0), Rat(1)};
  pull.gamma0 = pair_form(3, 0, 1, 1);
  G.cocycles.push_back(pull);

  G.invariants.push_back({"central-charge", [](const RatVec& mu) -> Rat { return mu[2]; }});
  return G;
}

// --------------------------------------------------------------- galilei11

GroupRealization make_galilei11() {
  LieAlgebra L("galilei11", {"H", "P", "K"});
  L.set_bracket(2, 0, {Rat(0), Rat(1), Rat(0)}); // [K, H] = P
  GroupRealization G;
  G.name = "galilei11";
  G.algebra = L;
  G.lo = box(3, -8);
  G.hi = box(3, 8);
  G.sample_lo = box(3, -1);
  G.sample_hi = box(3, 1);
  // coordinates (b, a, v): time shift, space shift, boost
  G.law = [](const Vec& g1, const Vec& g2) -> Vec {
    Vec out(3);
    out[0] = g1[0] + g2[0];
    out[1] = g1[1] + g2[1] + g1[2] * g2[0];
    out[2] = g1[2] + g2[2];
    return out;
  };
  G.inverse = [](const Vec& g) -> Vec {
    Vec out(3);
    out[0] = -g[0];
    out[1] = -g[1] + g[2] * g[0];
    out[2] = -g[2];
    return out;
  };
  G.ad = [](const Vec& g) -> Mat {
    Mat a = Mat::Identity(3, 3);
    a(1, 0) = g[2];
    a(1, 2) = -g[0];
    return a;
  };
  G.exp_one_param = [](const Vec& x, double t) -> Vec {
    Vec out(3);
    out[0] = t * x[0];
    out[1] = t * x[1] + 0.5 * t * t * x[2] * x[0];
    out[2] = t * x[2];
    return out;
  };

  RealizationCocycle mass;
  mass.name = "mass";
  mass.xi = [](const Vec& g1, const Vec& g2) {
    return -(g1[2] * g2[1] + 0.5 * g1[2] * g1[2] * g2[0]);
  };
  mass.gamma0 = pair_form(3, 1, 2, 1); // gamma(P, K) = 1
  G.cocycles.push_back(mass);

  G.invariants.push_back({"momentum", [](const RatVec& mu) -> Rat { return mu[1]; }});
  return G;
}

// -------------------------------------------------------------- poincare11

GroupRealization make_poincare11() {
  LieAlgebra L("poincare11", {"H", "P", "K"});
  L.set_bracket(2, 0, {Rat(0), Rat(1), Rat(0)}); // [K, H] = P
  L.set_bracket(2, 1, {Rat(1), Rat(0), Rat(0)}); // [K, P] = H
  GroupRealization G;
  G.name = "poincare11";
  G.algebra = L;
  G.lo = box(3, -8);
  G.hi = box(3, 8);
  G.sample_lo = box(3, -1);
  G.sample_hi = box(3, 1);
  // coordinates (b, a, v): time shift, space shift, rapidity
  G.law = [](const Vec& g1, const Vec& g2) -> Vec {
    double ch = std::cosh(g1[2]), sh = std::sinh(g1[2]);
    Vec out(3);
    out[0] = g1[0] + g2[0] * ch + g2[1] * sh;
    out[1] = g1[1] + g2[0] * sh + g2[1] * ch;
    out[2] = g1[2] + g2[2];
    return out;
  };
  G.inverse = [](const Vec& g) -> Vec {
    double ch = std::cosh(g[2]), sh = std::sinh(g[2]);
    Vec out(3);
    out[0] = g[1] * sh - g[0] * ch;
    out[1] = g[0] * sh - g[1] * ch;
    out[2] = -g[2];
    return out;
  };
  G.ad = [](const Vec& g) -> Mat {
    double ch = std::cosh(g[2]), sh = std::sinh(g[2]);
    Mat a(3, 3);
    a << ch, sh, -g[1], sh, ch, -g[0], 0, 0, 1;
    return a;
  };
  G.exp_one_param = [](const Vec& x, double t) -> Vec {
    Vec out(3);
    if (std::abs(x[2]) < 1e-300) {
      out[0] = t * x[0];
      out[1] = t * x[1];
      out[2] = 0.0;
      return out;
    }
    double w = t * x[2];
    out[0] = (x[0] * std::sinh(w) + x[1] * (std::cosh(w) - 1)) / x[2];
    out[1] = (x[0] * (std::cosh(w) - 1) + x[1] * std::sinh(w)) / x[2];
    out[2] = w;
    return out;
  };

  RealizationCocycle rest;
  rest.name = "rest-energy";
  rest.lambda = [](const Vec& g) { return -g[0]; };
  rest.lambda0 = {Rat(-1), Rat(0), Rat(0)};
  rest.xi = [](const Vec& g1, const Vec& g2) {
    return -(g2[0] * (std::cosh(g1[2]) - 1) + g2[1] * std::sinh(g1[2]));
  };
  rest.gamma0 = pair_form(3, 1, 2, 1);
  G.cocycles.push_back(rest);

  G.invariants.push_back(
      {"mass-squared", [](const RatVec& mu) -> Rat { return mu[0] * mu[0] - mu[1] * mu[1]; }});
  return G;
}

// --------------------------------------------------------------------- su2

// chart (a, b, c) -> exp(a X1) exp(b X2) exp(c X3), X_k = -(i/2) sigma_k
Mat2c su2_matrix(const Vec& g) {
  double c1 = std::cos(g[0] / 2), s1 = std::sin(g[0] / 2);
  double c2 = std::cos(g[1] / 2), s2 = std::sin(g[1] / 2);
  Cplx e = std::polar(1.0, -g[2] / 2);
  Cplx alpha = Cplx(c1 * c2, -s1 * s2) * e;
  Cplx beta = Cplx(-c1 * s2, -s1 * c2) * std::conj(e);
  Mat2c m;
  m << alpha, beta, -std::conj(beta), std::conj(alpha);
  return m;
}

Vec su2_extract(const Mat2c& m) {
  Cplx alpha = m(0, 0), beta = m(0, 1);
  Cplx p = alpha * beta; // -(sin b)/2 - (i/2) sin a cos b
  double sinb = std::clamp(-2.0 * std::real(p), -1.0, 1.0);
  double cosb = std::sqrt(std::max(0.0, 1.0 - sinb * sinb));
  if (cosb < kChartEps)
    throw ChartOverflow("su2 chart: second coordinate at a pole");
  double b = std::asin(sinb);
  double a = std::atan2(-2.0 * std::imag(p), std::norm(alpha) - std::norm(beta));
  Cplx den(std::cos(a / 2) * std::cos(b / 2), -std::sin(a / 2) * std::sin(b / 2));
  if (std::abs(den) < kChartEps)
    throw ChartOverflow("su2 chart: first coordinate at a pole");
  Cplx e = alpha / den;
  double c = -2.0 * std::atan2(std::imag(e), std::real(e));
  Vec out(3);
  out << a, b, c;
  return out;
}

Mat2c su2_generator(int k) {
  const Cplx i(0, 1);
  Mat2c s;
  if (k == 0)
    s << 0, 1, 1, 0;
  else if (k == 1)
    s << 0, -i, i, 0;
  else
    s << 1, 0, 0, -1;
  return Cplx(0, -0.5) * s;
}

Mat2c su2_axis_exp(int k, double t) {
  const Cplx i(0, 1);
  double c = std::cos(t / 2), s = std::sin(t / 2);
  Mat2c m;
  if (k == 0)
    m << Cplx(c), -i * s, -i * s, Cplx(c);
  else if (k == 1)
    m << Cplx(c), Cplx(-s), Cplx(s), Cplx(c);
  else
    m << Cplx(c, -s), Cplx(0), Cplx(0), Cplx(c, s);
  return m;
}

Mat su2_ad_of_matrix(const Mat2c& m) {
  const Cplx i(0, 1);
  Mat2c sig[3];
  sig[0] << 0, 1, 1, 0;
  sig[1] << 0, -i, i, 0;
  sig[2] << 1, 0, 0, -1;
  Mat a(3, 3);
  for (int j = 0; j < 3; ++j) {
    Mat2c n = m * su2_generator(j) * m.adjoint();
    for (int k = 0; k < 3; ++k) a(k, j) = std::real(i * (sig[k] * n).trace());
  }
  return a;
}

GroupRealization make_su2() {
  LieAlgebra L("su2", {"X1", "X2", "X3"});
  L.set_bracket(0, 1, {Rat(0), Rat(0), Rat(1)});
  L.set_bracket(1, 2, {Rat(1), Rat(0), Rat(0)});
  L.set_bracket(2, 0, {Rat(0), Rat(1), Rat(0)});
  GroupRealization G;
  G.name = "su2";
  G.algebra = L;
  G.lo = box(3, -3.2);
  G.hi = box(3, 3.2);
  G.sample_lo = box(3, -0.8);
  G.sample_hi = box(3, 0.8);
  G.law = [](const Vec& g1, const Vec& g2) -> Vec {
    return su2_extract(su2_matrix(g1) * su2_matrix(g2));
  };
  G.inverse = [](const Vec& g) -> Vec { return su2_extract(su2_matrix(g).adjoint()); };
  G.ad = [](const Vec& g) -> Mat { return su2_ad_of_matrix(su2_matrix(g)); };
  G.exp_one_param = [](const Vec& x, double t) -> Vec {
    int axis = -1, nonzero = 0;
    for (int i = 0; i < 3; ++i)
      if (x[i] != 0.0) {
        ++nonzero;
        axis = i;
      }
    if (nonzero == 0) return Vec::Zero(3);
    if (nonzero == 1) { // exact: the chart is built from axis exponentials
      Vec out = Vec::Zero(3);
      out[axis] = t * x[axis];
      return out;
    }
    double nrm = x.norm();
    double phi = t * nrm / 2;
    const Cplx i(0, 1);
    Mat2c sig_u;
    sig_u << Cplx(x[2] / nrm), Cplx(x[0] / nrm, -x[1] / nrm), Cplx(x[0] / nrm, x[1] / nrm),
        Cplx(-x[2] / nrm);
    Mat2c m = std::cos(phi) * Mat2c::Identity() - i * std::sin(phi) * sig_u;
    return su2_extract(m);
  };
  G.ad_of_params_override = [](const Vec& t) -> Mat {
    Mat2c m = su2_axis_exp(0, t[0]) * su2_axis_exp(1, t[1]) * su2_axis_exp(2, t[2]);
    return su2_ad_of_matrix(m);
  };
  G.element_of_params_override = [](const Vec& t) -> Vec {
    return su2_extract(su2_axis_exp(0, t[0]) * su2_axis_exp(1, t[1]) * su2_axis_exp(2, t[2]));
  };

  RealizationCocycle lz;
  lz.name = "lambda-z";
  lz.lambda = [](const Vec& g) { return g[2]; };
  lz.lambda0 = {Rat(0), Rat(0), Rat(1)};
  lz.xi = [law = G.law](const Vec& g1, const Vec& g2) {
    return law(g1, g2)[2] - g1[2] - g2[2];
  };
  lz.gamma0 = pair_form(3, 0, 1, 1);
  G.cocycles.push_back(lz);

  G.invariants.push_back({"radius-squared", [](const RatVec& mu) -> Rat {
                            return mu[0] * mu[0] + mu[1] * mu[1] + mu[2] * mu[2];
                          }});
  G.compact_data.push_back({"X3", {Rat(0), Rat(0), Rat(1)}, 4 * std::numbers::pi});
  return G;
}

// -------------------------------------------------------------------- sl2r

// chart (a, b, c) -> exp(a B1) exp(b B2) exp(c B3)
// B1 = diag(1,-1)/2, B2 = offdiag(1,1)/2, B3 = [[0,1],[-1,0]]/2
Mat2d sl2r_matrix(const Vec& g) {
  double ch = std::cosh(g[1] / 2), sh = std::sinh(g[1] / 2);
  double C = std::cos(g[2] / 2), S = std::sin(g[2] / 2);
  double ea = std::exp(g[0] / 2);
  Mat2d m;
  m << ea * (ch * C - sh * S), ea * (ch * S + sh * C), (sh * C - ch * S) / ea,
      (sh * S + ch * C) / ea;
  return m;
}

Vec sl2r_extract(const Mat2d& m) {
  double q1 = m(0, 0) * m(0, 0) + m(0, 1) * m(0, 1);
  double q2 = m(1, 0) * m(1, 0) + m(1, 1) * m(1, 1);
  if (q1 <= 0 || q2 <= 0) throw ChartOverflow("sl2r chart: degenerate row");
  double a = 0.5 * std::log(q1 / q2);
  double chb = std::sqrt(q1 * q2); // cosh b, >= 1 by the determinant identity
  double u = m(0, 0) * m(1, 1) + m(0, 1) * m(1, 0);
  double ea = std::exp(a);
  double v = m(0, 0) * m(0, 1) / ea - ea * m(1, 0) * m(1, 1);
  double w = m(0, 0) * m(0, 1) / ea + ea * m(1, 0) * m(1, 1);
  if (std::abs(u) < kChartEps * chb)
    throw ChartOverflow("sl2r chart: rotation angle at a quarter turn");
  double cosc = u / chb;
  double b = std::asinh(w / cosc); // sinh b = w / cos c
  double c = std::atan2(v, cosc);
  Vec out(3);
  out << a, b, c;
  return out;
}

Mat2d sl2r_generator(int k) {
  Mat2d b;
  if (k == 0)
    b << 0.5, 0, 0, -0.5;
  else if (k == 1)
    b << 0, 0.5, 0.5, 0;
  else
    b << 0, 0.5, -0.5, 0;
  return b;
}

Mat2d sl2r_axis_exp(int k, double t) {
  Mat2d m;
  if (k == 0) {
    m << std::exp(t / 2), 0, 0, std::exp(-t / 2);
  } else if (k == 1) {
    m << std::cosh(t / 2), std::sinh(t / 2), std::sinh(t / 2), std::cosh(t / 2);
  } else {
    m << std::cos(t / 2), std::sin(t / 2), -std::sin(t / 2), std::cos(t / 2);
  }
  return m;
}

Mat sl2r_ad_of_matrix(const Mat2d& m) {
  Mat2d minv;
  minv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0); // det = 1
  Mat a(3, 3);
  for (int j = 0; j < 3; ++j) {
    Mat2d n = m * sl2r_generator(j) * minv;
    a(0, j) = n(0, 0) - n(1, 1);
    a(1, j) = n(0, 1) + n(1, 0);
    a(2, j) = n(0, 1) - n(1, 0);
  }
  return a;
}

GroupRealization make_sl2r() {
  LieAlgebra L("sl2r", {"X1", "X2", "X3"});
  L.set_bracket(0, 1, {Rat(0), Rat(0), Rat(1)});
  L.set_bracket(1, 2, {Rat(-1), Rat(0), Rat(0)});
  L.set_bracket(2, 0, {Rat(0), Rat(-1), Rat(0)});
  GroupRealization G;
  G.name = "sl2r";
  G.algebra = L;
  G.lo = box(3, -3.2);
  G.hi = box(3, 3.2);
  G.sample_lo = box(3, -0.8);
  G.sample_hi = box(3, 0.8);
  G.law = [](const Vec& g1, const Vec& g2) -> Vec {
    return sl2r_extract(sl2r_matrix(g1) * sl2r_matrix(g2));
  };
  G.inverse = [](const Vec& g) -> Vec {
    Mat2d m = sl2r_matrix(g), minv;
    minv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    return sl2r_extract(minv);
  };
  G.ad = [](const Vec& g) -> Mat { return sl2r_ad_of_matrix(sl2r_matrix(g)); };
  G.exp_one_param = [](const Vec& x, double t) -> Vec {
    int axis = -1, nonzero = 0;
    for (int i = 0; i < 3; ++i)
      if (x[i] != 0.0) {
        ++nonzero;
        axis = i;
      }
    if (nonzero == 0) return Vec::Zero(3);
    if (nonzero == 1) {
      Vec out = Vec::Zero(3);
      out[axis] = t * x[axis];
      return out;
    }
    Mat2d A;
    A << t * x[0] / 2, t * (x[1] + x[2]) / 2, t * (x[1] - x[2]) / 2, -t * x[0] / 2;
    double d = -A.determinant(); // A^2 = d I for traceless A
    Mat2d m;
    if (d > 1e-300) {
      double s = std::sqrt(d);
      m = std::cosh(s) * Mat2d::Identity() + (std::sinh(s) / s) * A;
    } else if (d < -1e-300) {
      double s = std::sqrt(-d);
      m = std::cos(s) * Mat2d::Identity() + (std::sin(s) / s) * A;
    } else {
      m = Mat2d::Identity() + A;
    }
    return sl2r_extract(m);
  };
  G.ad_of_params_override = [](const Vec& t) -> Mat {
    Mat2d m = sl2r_axis_exp(0, t[0]) * sl2r_axis_exp(1, t[1]) * sl2r_axis_exp(2, t[2]);
    return sl2r_ad_of_matrix(m);
  };
  G.element_of_params_override = [](const Vec& t) -> Vec {
    return sl2r_extract(sl2r_axis_exp(0, t[0]) * sl2r_axis_exp(1, t[1]) * sl2r_axis_exp(2, t[2]));
  };

  RealizationCocycle lz;
  lz.name = "lambda-z";
  lz.lambda = [](const Vec& g) { return g[2]; };
  lz.lambda0 = {Rat(0), Rat(0), Rat(1)};
  lz.xi = [law = G.law](const Vec& g1, const Vec& g2) {
    return law(g1, g2)[2] - g1[2] - g2[2];
  };
  lz.gamma0 = pair_form(3, 0, 1, 1);
  G.cocycles.push_back(lz);

  G.invariants.push_back({"casimir", [](const RatVec& mu) -> Rat {
                            return mu[0] * mu[0] + mu[1] * mu[1] - mu[2] * mu[2];
                          }});
  G.compact_data.push_back({"X3", {Rat(0), Rat(0), Rat(1)}, 4 * std::numbers::pi});
  G.note = "orbits of this realization can be multiply connected; verdicts compare "
           "coadjoint data only and do not separate quantization classes on such orbits";
  return G;
}

// ----------------------------------------------------------------- catalog

std::vector<std::shared_ptr<const GroupRealization>> build_catalog() {
  std::vector<std::shared_ptr<const GroupRealization>> entries;
  entries.push_back(std::make_shared<GroupRealization>(make_abelian2()));
  entries.push_back(std::make_shared<GroupRealization>(make_heisenberg1()));
  entries.push_back(std::make_shared<GroupRealization>(make_galilei11()));
  entries.push_back(std::make_shared<GroupRealization>(make_poincare11()));
  entries.push_back(std::make_shared<GroupRealization>(make_su2()));
  entries.push_back(std::make_shared<GroupRealization>(make_sl2r()));

  for (const auto& g : entries) {
    VerifyReport r = group_verify(*g, 16, 0xC0FFEEu);
    if (!r.ok) {
      std::ostringstream msg;
      msg << "catalog entry " << g->name << " failed its self-test:";
      for (const VerifyLine& line : r.lines)
        if (!line.ok) msg << " " << line.check << " (worst " << line.worst << ")";
      throw CatalogSelfTestFailure(msg.str());
    }
  }
  return entries;
}

} // namespace

const std::vector<std::shared_ptr<const GroupRealization>>& catalog() {
  static const std::vector<std::shared_ptr<const GroupRealization>> entries = build_catalog();
  return entries;
}

std::shared_ptr<const GroupRealization> catalog_find(const std::string& name) {
  for (const auto& g : catalog())
    if (g->name == name) return g;
  return nullptr;
}

} // namespace lieco
