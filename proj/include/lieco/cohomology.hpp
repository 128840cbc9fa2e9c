#pragma once

#include "lieco/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieco {

/// Antisymmetric rational matrix, one value per pair of basis vectors.
using CocycleMatrix = RatMat;

/// True when gamma is antisymmetric and closed:
/// sum_m C^m_{ij} gamma_{mk} + cyclic = 0 for every triple i < j < k.
bool is_closed_two_form(const LieAlgebra& L, const CocycleMatrix& gamma);

/// Throws NotAntisymmetric / NotClosed / DimensionMismatch when gamma is not
/// a 2-cocycle of L.
void require_two_cocycle(const LieAlgebra& L, const CocycleMatrix& gamma);

/// Gamma_mu(X, Y) = mu([X, Y]); the coboundary of the functional mu.
CocycleMatrix coboundary_of(const LieAlgebra& L, const RatVec& mu);

/// Basis of the closed antisymmetric 2-forms Z^2. Unknowns are the (i < j)
/// entries in lexicographic order; the basis comes from the RREF nullspace
/// of the closedness system, so it is deterministic.
std::vector<CocycleMatrix> cocycle_space(const LieAlgebra& L);

/// Deterministic basis of the coboundaries B^2 (RREF of the span of the
/// Gamma_{e_k}).
std::vector<CocycleMatrix> coboundary_space(const LieAlgebra& L);

struct H2Report {
  int z2_dim = 0;
  int b2_dim = 0;
  int h2_dim = 0;
  std::vector<CocycleMatrix> z2_basis;
  std::vector<CocycleMatrix> b2_basis;
};

H2Report h2_report(const LieAlgebra& L);

struct DecomposeResult {
  bool trivial = false;
  std::optional<RatVec> mu;      // present iff trivial; Gamma = coboundary_of(mu)
  CocycleMatrix representative;  // gamma reduced modulo B^2; zero iff trivial
};

/// Splits a closed gamma into coboundary part and residual class.
/// mu is the particular solution with free variables zero in the
/// deterministic pivot order. Throws NotClosed on input that is not closed.
DecomposeResult h2_decompose(const LieAlgebra& L, const CocycleMatrix& gamma);

struct CentralExtension {
  LieAlgebra extended;   // dim n+1, central generator last
  CocycleMatrix gamma;   // inducing cocycle on the base
  int central_index = 0; // = n
};

/// [Xt_i, Xt_j] = C^k_{ij} Xt_k + gamma_{ij} X0 with X0 central.
/// The new generator keeps out of every bracket image.
CentralExtension central_extension(const LieAlgebra& L, const CocycleMatrix& gamma,
                                   const std::string& central_name = "X0");

/// Extension by the coboundary of l0: [Xc_i, Xc_j] = C^k_{ij}(Xc_k + l0_k X0).
CentralExtension pseudo_extension(const LieAlgebra& L, const RatVec& l0,
                                  const std::string& central_name = "X0");

/// Basis change (n+1)x(n+1), columns = new basis in the old one, under which
/// the extension brackets lose every X0 term: Xc_i -> Xc_i + mu_i X0.
/// Throws NotACoboundary when gamma is not exact.
RatMat trivialize_pseudo_extension(const LieAlgebra& base, const CentralExtension& ext);

struct ContractionResult {
  LieAlgebra algebra;                  // contracted structure constants
  std::optional<CocycleMatrix> gamma;  // contracted cocycle when one was given
  std::vector<int> weights;            // 0 on the subalgebra, 1 elsewhere
};

/// Inonu-Wigner contraction along the subalgebra spanned by the given basis
/// indices (weight 0; weight 1 elsewhere). A structure constant survives iff
/// w_i + w_j - w_k = 0 and is killed iff > 0. A cocycle entry survives iff
/// w_i + w_j = scale, is killed iff greater, and a nonzero entry with
/// w_i + w_j < scale throws DivergenceError. Throws NotASubalgebra when the
/// chosen span is not closed under the bracket.
ContractionResult iw_contraction(const LieAlgebra& L, const std::vector<int>& sub_indices,
                                 const std::optional<CocycleMatrix>& gamma, int scale = 1);

} // namespace lieco
