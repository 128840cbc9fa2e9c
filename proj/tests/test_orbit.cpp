#include "lieco/orbit.hpp"

#include <doctest.h>

#include <cmath>

using namespace lieco;

namespace {

RatVec rv(std::initializer_list<Rat> xs) { return RatVec(xs); }

Vec v3(double a, double b, double c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

} // namespace

TEST_CASE("orbit invariants carry rank and casimirs") {
  auto su2 = catalog_find("su2");
  InvariantProfile p = orbit_invariants(*su2, nullptr, rv({Rat(0), Rat(0), Rat(1)}));
  CHECK(p.omega_rank == 2);
  REQUIRE(p.casimirs.size() == 1);
  CHECK(p.casimirs[0].first == "radius-squared");
  CHECK(p.casimirs[0].second == 1);

  // under a deformation the polynomial invariants no longer apply
  const RealizationCocycle& lz = su2->cocycle("lambda-z");
  InvariantProfile pd = orbit_invariants(*su2, &lz, rv({Rat(0), Rat(0), Rat(1)}));
  CHECK(pd.casimirs.empty());

  CHECK_THROWS_AS(orbit_invariants(*su2, nullptr, rv({Rat(1)})), DimensionMismatch);
}

TEST_CASE("orbit status renders as text") {
  CHECK(std::string(to_string(OrbitStatus::Equivalent)) == "equivalent");
  CHECK(std::string(to_string(OrbitStatus::Distinct)) == "distinct");
  CHECK(std::string(to_string(OrbitStatus::Inconclusive)) == "inconclusive");
}

TEST_CASE("points on the same su2 sphere are connected") {
  auto su2 = catalog_find("su2");
  SearchParams params; // defaults: tol 1e-8, seed 42
  OrbitVerdict v = same_orbit(*su2, nullptr, rv({Rat(0), Rat(0), Rat(1)}),
                              rv({Rat(1), Rat(0), Rat(0)}), params);
  REQUIRE(v.status == OrbitStatus::Equivalent);
  REQUIRE(v.witness.has_value());
  CHECK(v.residual < 1e-8);

  // the returned witness must satisfy the independent check
  double gap = symplectomorphism_witness_check(*su2, nullptr, rv({Rat(1), Rat(0), Rat(0)}),
                                               rv({Rat(0), Rat(0), Rat(1)}), *v.witness);
  CHECK(gap < 1e-7);
}

TEST_CASE("different su2 spheres are separated exactly") {
  auto su2 = catalog_find("su2");
  OrbitVerdict v = same_orbit(*su2, nullptr, rv({Rat(0), Rat(0), Rat(1)}),
                              rv({Rat(0), Rat(0), Rat(2)}), {});
  CHECK(v.status == OrbitStatus::Distinct);
  CHECK(v.separating_invariant == "radius-squared");
}

TEST_CASE("membership is reflexive through the identity start") {
  auto su2 = catalog_find("su2");
  OrbitVerdict v =
      same_orbit(*su2, nullptr, rv({Rat(0), Rat(0), Rat(1)}), rv({Rat(0), Rat(0), Rat(1)}), {});
  REQUIRE(v.status == OrbitStatus::Equivalent);
  CHECK(v.residual == 0.0);
  CHECK(v.witness->cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("rank screen separates galilean momenta from energies") {
  auto gal = catalog_find("galilei11");
  OrbitVerdict v = same_orbit(*gal, nullptr, rv({Rat(1), Rat(0), Rat(0)}),
                              rv({Rat(0), Rat(1), Rat(0)}), {});
  CHECK(v.status == OrbitStatus::Distinct);
  CHECK(v.separating_invariant == "omega-rank");

  // equal ranks, different momentum: the polynomial invariant decides
  OrbitVerdict w = same_orbit(*gal, nullptr, rv({Rat(0), Rat(1), Rat(0)}),
                              rv({Rat(0), Rat(2), Rat(0)}), {});
  CHECK(w.status == OrbitStatus::Distinct);
  CHECK(w.separating_invariant == "momentum");
}

TEST_CASE("mass deformation sweeps the origin onto the free-particle paraboloid") {
  auto gal = catalog_find("galilei11");
  const RealizationCocycle& mass = gal->cocycle("mass");
  RatVec zero = rv({Rat(0), Rat(0), Rat(0)});

  // F(b, a, v) = (-v^2/2, v, v b - a): pick v = 1, b = 1, a = 0
  OrbitVerdict on = same_orbit(*gal, &mass, zero, rv({Rat(-1, 2), Rat(1), Rat(1)}), {});
  CHECK(on.status == OrbitStatus::Equivalent);
  CHECK(on.residual < 1e-8);

  // energy +1 with momentum 1 lies off the paraboloid; no exact screen
  // exists under the deformation, so the search reports its best residual
  OrbitVerdict off = same_orbit(*gal, &mass, zero, rv({Rat(1), Rat(1), Rat(1)}), {});
  CHECK(off.status == OrbitStatus::Inconclusive);
  CHECK(off.residual > 1e-2);
}

TEST_CASE("the weyl deformation collapses the plane") {
  auto ab = catalog_find("abelian2");
  const RealizationCocycle& weyl = ab->cocycle("weyl");
  RatVec a = rv({Rat(1), Rat(0)}), b = rv({Rat(0), Rat(1)});

  OrbitVerdict with = pseudo_class_equivalent(*ab, &weyl, a, b, {});
  CHECK(with.status == OrbitStatus::Equivalent);
  CHECK(with.residual < 1e-8);

  OrbitVerdict without = pseudo_class_equivalent(*ab, nullptr, a, b, {});
  CHECK(without.status == OrbitStatus::Distinct);
  CHECK(without.separating_invariant == "mu1");
}

TEST_CASE("sl2r separates sheets by the casimir and flags multiconnectivity") {
  auto sl2r = catalog_find("sl2r");
  OrbitVerdict hyp = same_orbit(*sl2r, nullptr, rv({Rat(1), Rat(0), Rat(0)}),
                                rv({Rat(0), Rat(1), Rat(0)}), {});
  CHECK(hyp.status == OrbitStatus::Equivalent);
  CHECK_FALSE(hyp.note.empty());

  OrbitVerdict cone = same_orbit(*sl2r, nullptr, rv({Rat(1), Rat(0), Rat(0)}),
                                 rv({Rat(0), Rat(0), Rat(1)}), {});
  CHECK(cone.status == OrbitStatus::Distinct);
  CHECK(cone.separating_invariant == "casimir");
}

TEST_CASE("witness check works where the chart cannot") {
  auto su2 = catalog_find("su2");
  // the quarter turn about X2 maps X3* to X1* but has no chart coordinates
  Vec pole = v3(0.0, M_PI / 2, 0.0);
  double gap = symplectomorphism_witness_check(*su2, nullptr, rv({Rat(1), Rat(0), Rat(0)}),
                                               rv({Rat(0), Rat(0), Rat(1)}), pole);
  CHECK(gap < 1e-9);

  // a wrong witness is rejected loudly
  double bad = symplectomorphism_witness_check(*su2, nullptr, rv({Rat(1), Rat(0), Rat(0)}),
                                               rv({Rat(0), Rat(0), Rat(1)}), v3(0, 0, 0));
  CHECK(bad > 0.5);
}

TEST_CASE("searches are deterministic for a fixed seed") {
  auto su2 = catalog_find("su2");
  SearchParams params;
  params.seed = 7;
  RatVec a = rv({Rat(0), Rat(0), Rat(1)}), b = rv({Rat(1), Rat(0), Rat(0)});
  OrbitVerdict v1 = same_orbit(*su2, nullptr, a, b, params);
  OrbitVerdict v2 = same_orbit(*su2, nullptr, a, b, params);
  CHECK(v1.status == v2.status);
  CHECK(v1.residual == v2.residual);
  REQUIRE(v1.witness.has_value());
  REQUIRE(v2.witness.has_value());
  CHECK((*v1.witness - *v2.witness).cwiseAbs().maxCoeff() == 0.0);
}
