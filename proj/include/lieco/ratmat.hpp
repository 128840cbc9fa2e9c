#pragma once

#include "lieco/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace lieco {

/// Dense matrix over exact rationals. Row major, sized at construction.
class RatMat {
public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}

  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  RatMat transpose() const;
  RatMat operator*(const RatMat& o) const;
  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat scaled(const Rat& s) const;
  RatVec apply(const RatVec& v) const;      // this * v
  RatVec apply_left(const RatVec& v) const; // v^T * this

  bool operator==(const RatMat& o) const;
  bool is_zero() const;
  bool is_antisymmetric() const;

  /// Reduced row echelon form in place; returns pivot column indices.
  std::vector<int> rref();
  int rank() const;
  std::vector<RatVec> nullspace() const;
  std::optional<RatMat> inverse() const;

  /// Particular solution of this * x = b with non-pivot variables set to 0,
  /// pivots chosen in column order. Empty when the system is inconsistent.
  std::optional<RatVec> solve(const RatVec& b) const;

private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

/// Row-reduces the given row vectors to a canonical spanning set
/// (RREF rows, zero rows dropped). Basis of the row space.
std::vector<RatVec> row_space_basis(const std::vector<RatVec>& rows);

/// True when the two row sets span the same subspace.
bool same_span(const std::vector<RatVec>& a, const std::vector<RatVec>& b);

struct SkewNormalForm {
  int rank = 0; // always even
  RatMat basis; // columns b_1..b_n with basis^T * omega * basis = J_r (+) 0
};

/// Exact normal form of an antisymmetric matrix: first `rank` basis columns
/// come in hyperbolic pairs (u_1, v_1, ...) with omega(u_i, v_i) = 1, the
/// remainder spans the kernel.
SkewNormalForm skew_normal_form(const RatMat& omega);

} // namespace lieco
