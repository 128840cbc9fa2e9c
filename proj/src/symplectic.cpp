#include "lieco/symplectic.hpp"

#include <cmath>
#include <numbers>

namespace lieco {

PresymplecticForm presymplectic_matrix(const LieAlgebra& L, const RatVec& l0,
                                       const std::optional<CocycleMatrix>& gamma) {
  const int n = L.dim();
  if (int(l0.size()) != n) throw DimensionMismatch("functional size");
  CocycleMatrix omega = coboundary_of(L, l0);
  if (gamma) {
    if (gamma->rows() != n || gamma->cols() != n)
      throw DimensionMismatch("cocycle size does not match the algebra");
    if (!gamma->is_antisymmetric()) throw NotAntisymmetric("deformation is not antisymmetric");
    omega = omega + *gamma;
  }
  SkewNormalForm nf = skew_normal_form(omega);
  PresymplecticForm out;
  out.omega = std::move(omega);
  out.rank = nf.rank;
  out.basis = std::move(nf.basis);
  return out;
}

std::vector<RatVec> characteristic_subalgebra(const LieAlgebra& L, const RatVec& l0,
                                              const std::optional<CocycleMatrix>& gamma) {
  PresymplecticForm f = presymplectic_matrix(L, l0, gamma);
  std::vector<RatVec> kernel = f.omega.nullspace();
  if (!gamma) {
    // isotropy subalgebra of l0: closed under the bracket
    for (const RatVec& ya : kernel)
      for (const RatVec& yb : kernel) {
        AlgebraVector z = bracket(L, AlgebraVector(ya), AlgebraVector(yb));
        RatVec img = f.omega.apply(z.c);
        for (const Rat& x : img)
          if (x != 0) throw std::logic_error("isotropy kernel not closed under bracket");
      }
  }
  return kernel;
}

CoalgebraVector coad_deformed_infinitesimal(const LieAlgebra& L, const AlgebraVector& x,
                                            const CoalgebraVector& mu,
                                            const std::optional<CocycleMatrix>& gamma) {
  CoalgebraVector out = coad_apply(L, x, mu);
  if (gamma) {
    if (gamma->rows() != L.dim()) throw DimensionMismatch("cocycle size");
    for (int j = 0; j < L.dim(); ++j) {
      Rat s = 0;
      for (int i = 0; i < L.dim(); ++i)
        if (x.c[i] != 0) s += x.c[i] * gamma->at(i, j);
      out.c[j] += s;
    }
  }
  return out;
}

Rat orbit_symplectic_form_at(const LieAlgebra& L, const CoalgebraVector& nu,
                             const AlgebraVector& x, const AlgebraVector& y,
                             const std::optional<CocycleMatrix>& gamma) {
  Rat s = nu.pair(bracket(L, x, y));
  if (gamma) {
    for (int i = 0; i < L.dim(); ++i) {
      if (x.c[i] == 0) continue;
      for (int j = 0; j < L.dim(); ++j)
        if (y.c[j] != 0) s += x.c[i] * gamma->at(i, j) * y.c[j];
    }
  }
  return s;
}

IntegralityReport integrality_check(const LieAlgebra& L, const RatVec& l0,
                                    const std::vector<CompactGeneratorDatum>& data,
                                    double tol) {
  const int n = L.dim();
  if (int(l0.size()) != n) throw DimensionMismatch("functional size");
  PresymplecticForm f = presymplectic_matrix(L, l0, std::nullopt);

  IntegralityReport report;
  report.modeling_note =
      "each compact generator is tested against its own period; joint "
      "commensurability of several compact directions is not modeled";
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (const CompactGeneratorDatum& d : data) {
    IntegralityEntry e;
    e.name = d.name;
    if (int(d.generator.size()) != n) throw DimensionMismatch("compact generator size");
    RatVec img = f.omega.apply(d.generator);
    e.in_characteristic_subalgebra =
        std::all_of(img.begin(), img.end(), [](const Rat& x) { return x == 0; });
    if (!e.in_characteristic_subalgebra) {
      report.any_skipped = true;
      report.entries.push_back(std::move(e));
      continue; // outside the kernel the loop is not generated by X alone
    }
    Rat pairing = 0;
    for (int i = 0; i < n; ++i) pairing += l0[i] * d.generator[i];
    e.pairing_times_period = rat_d(pairing) * d.period;
    e.nearest_multiple = two_pi * std::round(e.pairing_times_period / two_pi);
    e.integral = std::abs(e.pairing_times_period - e.nearest_multiple) <= tol;
    if (!e.integral) report.integral = false;
    report.entries.push_back(std::move(e));
  }
  return report;
}

} // namespace lieco
