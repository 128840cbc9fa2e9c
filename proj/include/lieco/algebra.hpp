#pragma once

#include "lieco/errors.hpp"
#include "lieco/ratmat.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace lieco {

/// Element of the algebra, components against the declared basis.
struct AlgebraVector {
  RatVec c;
  AlgebraVector() = default;
  explicit AlgebraVector(RatVec v) : c(std::move(v)) {}
  AlgebraVector(std::initializer_list<Rat> v) : c(v) {}
  int dim() const { return int(c.size()); }
  bool is_zero() const;
};

/// Linear functional on the algebra, components against the dual basis.
struct CoalgebraVector {
  RatVec c;
  CoalgebraVector() = default;
  explicit CoalgebraVector(RatVec v) : c(std::move(v)) {}
  CoalgebraVector(std::initializer_list<Rat> v) : c(v) {}
  int dim() const { return int(c.size()); }
  Rat pair(const AlgebraVector& x) const; // <mu, X>
};

/// Finite dimensional Lie algebra given by structure constants.
/// Storage keeps one entry per unordered pair i < j; the i > j half is
/// served by antisymmetric completion. Construction does not prove the
/// Jacobi identity; validate() does.
class LieAlgebra {
public:
  LieAlgebra() = default;
  LieAlgebra(std::string name, std::vector<std::string> basis_names);

  const std::string& name() const { return name_; }
  int dim() const { return int(names_.size()); }
  const std::vector<std::string>& basis_names() const { return names_; }
  int index_of(const std::string& basis_name) const; // throws UnknownName

  /// Declares [X_i, X_j] = sum_k coeffs[k] X_k for i < j.
  /// Throws NotAntisymmetric for i == j, DimensionMismatch on bad sizes.
  void set_bracket(int i, int j, RatVec coeffs);

  /// Structure constant C^k_{ij}, antisymmetry applied for i > j.
  Rat c(int i, int j, int k) const;

  /// Non-zero declared pairs in lexicographic (i < j) order.
  std::vector<std::pair<int, int>> nonzero_pairs() const;

  bool same_table(const LieAlgebra& o) const;

  LieAlgebra renamed(std::string new_name) const;

private:
  std::string name_;
  std::vector<std::string> names_;
  std::map<std::pair<int, int>, RatVec> table_;
};

struct ValidationIssue {
  std::string kind;            // "JacobiViolation"
  std::tuple<int, int, int> triple{0, 0, 0};
  RatVec residual;             // components of the cyclic bracket sum
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;
};

/// Checks the Jacobi identity over every basis triple, exactly.
/// Reports each violated triple with the residual vector.
ValidationReport validate_algebra(const LieAlgebra& L);

/// [X, Y]^k = sum_{ij} X^i Y^j C^k_{ij}, exact and bilinear.
AlgebraVector bracket(const LieAlgebra& L, const AlgebraVector& x, const AlgebraVector& y);

/// Matrix M of the coadjoint action of X: (M mu)(Y) = mu([X, Y]).
/// M_{jk} = sum_i X^i C^k_{ij}. The frequently wanted "minus transpose"
/// variant is left to the caller.
RatMat coad_matrix(const LieAlgebra& L, const AlgebraVector& x);

CoalgebraVector coad_apply(const LieAlgebra& L, const AlgebraVector& x, const CoalgebraVector& mu);

/// Structure constants in the basis Y_a = sum_i P(i,a) X_i; P invertible.
LieAlgebra change_basis(const LieAlgebra& L, const RatMat& p,
                        std::vector<std::string> new_names, std::string new_algebra_name);

} // namespace lieco
