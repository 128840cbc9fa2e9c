#include "lieco/cohomology.hpp"
#include "lieco/group.hpp"

#include <doctest.h>

#include <random>

using namespace lieco;

namespace {

const LieAlgebra& alg(const std::string& name) { return catalog_find(name)->algebra; }

CocycleMatrix pair_form(int n, int i, int j, const Rat& value) {
  CocycleMatrix g(n, n);
  g.at(i, j) = value;
  g.at(j, i) = -value;
  return g;
}

RatVec rand_vec(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  RatVec v(n);
  for (Rat& x : v) {
    x = Rat(num(rng), den(rng));
    x.canonicalize();
  }
  return v;
}

} // namespace

TEST_CASE("cohomology dimensions of the catalog algebras") {
  struct Row {
    const char* name;
    int z2, b2, h2;
  };
  // z2 = b2 + h2 throughout; values fixed by the exact linear algebra
  const Row rows[] = {
      {"abelian2", 1, 0, 1},   {"heisenberg1", 3, 1, 2}, {"galilei11", 3, 1, 2},
      {"poincare11", 3, 2, 1}, {"su2", 3, 3, 0},         {"sl2r", 3, 3, 0},
  };
  for (const Row& row : rows) {
    CAPTURE(row.name);
    H2Report rep = h2_report(alg(row.name));
    CHECK(rep.z2_dim == row.z2);
    CHECK(rep.b2_dim == row.b2);
    CHECK(rep.h2_dim == row.h2);
    CHECK(int(rep.z2_basis.size()) == row.z2);
    CHECK(int(rep.b2_basis.size()) == row.b2);
    for (const CocycleMatrix& g : rep.z2_basis) CHECK(is_closed_two_form(alg(row.name), g));
  }
}

TEST_CASE("closedness detects a non-cocycle on a 4-dimensional algebra") {
  // on the mass extension of galilei11, gamma(H, X0) = 1 fails on (H, P, K):
  // gamma([P,K], H) = gamma(X0, H) = -1 and the other two terms vanish
  const LieAlgebra& gal = alg("galilei11");
  CentralExtension ext = central_extension(gal, pair_form(3, 1, 2, Rat(1)));
  CHECK(validate_algebra(ext.extended).ok);
  CocycleMatrix not_closed = pair_form(4, 0, 3, Rat(1));
  CHECK_FALSE(is_closed_two_form(ext.extended, not_closed));
  CHECK_THROWS_AS(require_two_cocycle(ext.extended, not_closed), NotClosed);

  CocycleMatrix not_antisym(4, 4);
  not_antisym.at(0, 1) = 1; // missing the mirrored entry
  CHECK_THROWS_AS(require_two_cocycle(ext.extended, not_antisym), NotAntisymmetric);
}

TEST_CASE("coboundary_of pairs the functional with the bracket") {
  // galilei11: [H,K] = -P, so mu = P* gives gamma(H,K) = -1
  CocycleMatrix g = coboundary_of(alg("galilei11"), {Rat(0), Rat(1), Rat(0)});
  CHECK(g.at(0, 2) == -1);
  CHECK(g.at(2, 0) == 1);
  CHECK(g.at(0, 1) == 0);
  CHECK(g.at(1, 2) == 0);
}

TEST_CASE("h2_decompose recovers coboundaries and flags the rest") {
  std::mt19937 rng(17);
  for (const char* name : {"galilei11", "su2", "poincare11", "heisenberg1"}) {
    CAPTURE(name);
    const LieAlgebra& L = alg(name);
    for (int trial = 0; trial < 10; ++trial) {
      RatVec mu = rand_vec(L.dim(), rng);
      CocycleMatrix g = coboundary_of(L, mu);
      DecomposeResult dec = h2_decompose(L, g);
      REQUIRE(dec.trivial);
      CHECK(coboundary_of(L, *dec.mu) == g);
      CHECK(dec.representative.is_zero());
    }
  }

  // the mass cocycle of galilei11 is not exact; nothing of it cancels
  CocycleMatrix mass = pair_form(3, 1, 2, Rat(1));
  DecomposeResult dec = h2_decompose(alg("galilei11"), mass);
  CHECK_FALSE(dec.trivial);
  CHECK_FALSE(dec.mu.has_value());
  CHECK(dec.representative == mass);

  // su2 has no non-trivial classes at all
  DecomposeResult su2dec = h2_decompose(alg("su2"), pair_form(3, 0, 1, Rat(1)));
  REQUIRE(su2dec.trivial);
  CHECK((*su2dec.mu)[2] == 1);
}

TEST_CASE("cocycle and coboundary bases are deterministic") {
  const LieAlgebra& L = alg("galilei11");
  auto z1 = cocycle_space(L), z2 = cocycle_space(L);
  auto b1 = coboundary_space(L), b2 = coboundary_space(L);
  REQUIRE(z1.size() == z2.size());
  for (size_t i = 0; i < z1.size(); ++i) CHECK(z1[i] == z2[i]);
  REQUIRE(b1.size() == b2.size());
  for (size_t i = 0; i < b1.size(); ++i) CHECK(b1[i] == b2[i]);
}

TEST_CASE("central_extension appends a central generator") {
  const LieAlgebra& gal = alg("galilei11");
  CentralExtension ext = central_extension(gal, pair_form(3, 1, 2, Rat(1)), "Z");
  REQUIRE(ext.extended.dim() == 4);
  CHECK(ext.central_index == 3);
  CHECK(ext.extended.basis_names()[3] == "Z");
  CHECK(validate_algebra(ext.extended).ok);
  // base brackets keep their components, the cocycle lands on the center
  CHECK(ext.extended.c(0, 2, 1) == -1); // [H,K] = -P survives
  CHECK(ext.extended.c(1, 2, 3) == 1);  // [P,K] = Z
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) CHECK(ext.extended.c(i, 3, k) == 0); // Z is central
}

TEST_CASE("pseudo_extension and its trivialization") {
  const LieAlgebra& poi = alg("poincare11");
  RatVec l0{Rat(-1), Rat(0), Rat(0)};
  CentralExtension ext = pseudo_extension(poi, l0);
  REQUIRE(ext.extended.dim() == 4);
  CHECK(validate_algebra(ext.extended).ok);
  // gamma(P,K) = l0([P,K]) = l0(-H) = 1
  CHECK(ext.gamma == pair_form(3, 1, 2, Rat(1)));
  CHECK(ext.extended.c(1, 2, 3) == 1);

  RatMat p = trivialize_pseudo_extension(poi, ext);
  std::vector<std::string> names = ext.extended.basis_names();
  LieAlgebra flat = change_basis(ext.extended, p, names, "flat");
  // in the new basis the central term is gone from every bracket
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      CHECK(flat.c(i, j, 3) == 0);
      for (int k = 0; k < 3; ++k) CHECK(flat.c(i, j, k) == poi.c(i, j, k));
    }

  // a genuinely non-exact cocycle cannot be flattened
  CentralExtension stuck = central_extension(alg("galilei11"), pair_form(3, 1, 2, Rat(1)));
  CHECK_THROWS_AS(trivialize_pseudo_extension(alg("galilei11"), stuck), NotACoboundary);
}

TEST_CASE("contraction generates cohomology from an exact cocycle") {
  const LieAlgebra& poi = alg("poincare11");
  CocycleMatrix gamma = pair_form(3, 1, 2, Rat(1));

  // before: exact (the rest energy functional trivializes it)
  DecomposeResult before = h2_decompose(poi, gamma);
  REQUIRE(before.trivial);
  CHECK((*before.mu)[0] == -1);

  // contract along the span of H; the surviving cocycle is no longer exact
  ContractionResult res = iw_contraction(poi, {0}, gamma, 2);
  CHECK(res.weights == std::vector<int>{0, 1, 1});
  CHECK(res.algebra.same_table(alg("galilei11")));
  REQUIRE(res.gamma.has_value());
  CHECK(*res.gamma == pair_form(3, 1, 2, Rat(1)));
  DecomposeResult after = h2_decompose(res.algebra, *res.gamma);
  CHECK_FALSE(after.trivial);
}

TEST_CASE("contraction kill and divergence rules") {
  const LieAlgebra& poi = alg("poincare11");
  CocycleMatrix gamma = pair_form(3, 1, 2, Rat(1));

  // weight sum 2 > scale 1: the entry dies quietly
  ContractionResult killed = iw_contraction(poi, {0}, gamma, 1);
  REQUIRE(killed.gamma.has_value());
  CHECK(killed.gamma->is_zero());

  // weight sum 2 < scale 3: the entry blows up
  CHECK_THROWS_AS(iw_contraction(poi, {0}, gamma, 3), DivergenceError);

  // span{X1, X2} of su2 is not closed: [X1,X2] = X3
  CHECK_THROWS_AS(iw_contraction(alg("su2"), {0, 1}, std::nullopt, 1), NotASubalgebra);

  // contracting su2 along X1 yields the euclidean algebra of the plane
  ContractionResult eu = iw_contraction(alg("su2"), {0}, std::nullopt, 1);
  CHECK(validate_algebra(eu.algebra).ok);
  CHECK(eu.algebra.c(0, 1, 2) == 1);  // [X1,X2] = X3 survives
  CHECK(eu.algebra.c(0, 2, 1) == -1); // [X1,X3] = -X2 survives
  for (int k = 0; k < 3; ++k) CHECK(eu.algebra.c(1, 2, k) == 0); // [X2,X3] dies
}

TEST_CASE("contraction preserves the Jacobi identity on random subalgebras") {
  std::mt19937 rng(23);
  for (const char* name : {"galilei11", "poincare11", "heisenberg1", "su2", "sl2r"}) {
    const LieAlgebra& L = alg(name);
    for (int i = 0; i < L.dim(); ++i) {
      // single generators always span a subalgebra
      ContractionResult res = iw_contraction(L, {i}, std::nullopt, 1);
      CAPTURE(name);
      CAPTURE(i);
      CHECK(validate_algebra(res.algebra).ok);
    }
  }
  (void)rng;
}
