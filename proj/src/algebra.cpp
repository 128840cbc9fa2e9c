#include "lieco/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace lieco {

bool AlgebraVector::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
}

Rat CoalgebraVector::pair(const AlgebraVector& x) const {
  if (c.size() != x.c.size()) throw DimensionMismatch("functional/vector size mismatch");
  Rat s = 0;
  for (size_t i = 0; i < c.size(); ++i) s += c[i] * x.c[i];
  return s;
}

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_names)
    : name_(std::move(name)), names_(std::move(basis_names)) {
  for (size_t i = 0; i < names_.size(); ++i)
    for (size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw std::invalid_argument("duplicate basis name: " + names_[i]);
}

int LieAlgebra::index_of(const std::string& basis_name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == basis_name) return int(i);
  throw UnknownName("unknown basis name: " + basis_name);
}

void LieAlgebra::set_bracket(int i, int j, RatVec coeffs) {
  if (i == j) throw NotAntisymmetric("bracket of " + names_.at(i) + " with itself");
  if (int(coeffs.size()) != dim()) throw DimensionMismatch("bracket coefficient count");
  Rat sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  if (sign < 0)
    for (Rat& x : coeffs) x = -x;
  bool nonzero = std::any_of(coeffs.begin(), coeffs.end(), [](const Rat& x) { return x != 0; });
  if (nonzero)
    table_[{i, j}] = std::move(coeffs);
  else
    table_.erase({i, j});
}

Rat LieAlgebra::c(int i, int j, int k) const {
  if (i == j) return 0;
  Rat sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  auto it = table_.find({i, j});
  if (it == table_.end()) return 0;
  return sign * it->second[k];
}

std::vector<std::pair<int, int>> LieAlgebra::nonzero_pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(table_.size());
  for (const auto& [key, val] : table_) out.push_back(key);
  return out;
}

bool LieAlgebra::same_table(const LieAlgebra& o) const {
  if (dim() != o.dim()) return false;
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j)
      for (int k = 0; k < dim(); ++k)
        if (c(i, j, k) != o.c(i, j, k)) return false;
  return true;
}

LieAlgebra LieAlgebra::renamed(std::string new_name) const {
  LieAlgebra copy = *this;
  copy.name_ = std::move(new_name);
  return copy;
}

ValidationReport validate_algebra(const LieAlgebra& L) {
  ValidationReport report;
  const int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        // residual_l = sum_m C^m_ij C^l_mk + C^m_jk C^l_mi + C^m_ki C^l_mj
        RatVec residual(n, Rat(0));
        bool nonzero = false;
        for (int l = 0; l < n; ++l) {
          Rat s = 0;
          for (int m = 0; m < n; ++m) {
            s += L.c(i, j, m) * L.c(m, k, l);
            s += L.c(j, k, m) * L.c(m, i, l);
            s += L.c(k, i, m) * L.c(m, j, l);
          }
          residual[l] = s;
          if (s != 0) nonzero = true;
        }
        if (nonzero) {
          ValidationIssue issue;
          issue.kind = "JacobiViolation";
          issue.triple = {i, j, k};
          issue.residual = residual;
          issue.message = "Jacobi identity fails on (" + L.basis_names()[i] + ", " +
                          L.basis_names()[j] + ", " + L.basis_names()[k] +
                          "), residual " + ratvec_str(residual);
          report.issues.push_back(std::move(issue));
          report.ok = false;
        }
      }
  return report;
}

AlgebraVector bracket(const LieAlgebra& L, const AlgebraVector& x, const AlgebraVector& y) {
  const int n = L.dim();
  if (x.dim() != n || y.dim() != n) throw DimensionMismatch("bracket operand size");
  RatVec out(n, Rat(0));
  for (auto [i, j] : L.nonzero_pairs()) {
    // contributions of the (i, j) and (j, i) slots
    Rat w = x.c[i] * y.c[j] - x.c[j] * y.c[i];
    if (w == 0) continue;
    for (int k = 0; k < n; ++k) {
      Rat cc = L.c(i, j, k);
      if (cc != 0) out[k] += w * cc;
    }
  }
  return AlgebraVector(std::move(out));
}

RatMat coad_matrix(const LieAlgebra& L, const AlgebraVector& x) {
  const int n = L.dim();
  if (x.dim() != n) throw DimensionMismatch("coadjoint argument size");
  RatMat m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Rat s = 0;
      for (int i = 0; i < n; ++i)
        if (x.c[i] != 0) s += x.c[i] * L.c(i, j, k);
      m.at(j, k) = s;
    }
  return m;
}

CoalgebraVector coad_apply(const LieAlgebra& L, const AlgebraVector& x, const CoalgebraVector& mu) {
  if (mu.dim() != L.dim()) throw DimensionMismatch("coadjoint functional size");
  return CoalgebraVector(coad_matrix(L, x).apply(mu.c));
}

LieAlgebra change_basis(const LieAlgebra& L, const RatMat& p,
                        std::vector<std::string> new_names, std::string new_algebra_name) {
  const int n = L.dim();
  if (p.rows() != n || p.cols() != n) throw DimensionMismatch("basis change must be square");
  auto pinv = p.inverse();
  if (!pinv) throw std::invalid_argument("basis change matrix is singular");
  LieAlgebra out(std::move(new_algebra_name), std::move(new_names));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      RatVec coeffs(n, Rat(0));
      // [Y_a, Y_b] = P^i_a P^j_b C^k_ij (P^{-1})^c_k Y_c
      for (int i = 0; i < n; ++i) {
        if (p.at(i, a) == 0) continue;
        for (int j = 0; j < n; ++j) {
          if (p.at(j, b) == 0) continue;
          Rat w = p.at(i, a) * p.at(j, b);
          for (int k = 0; k < n; ++k) {
            Rat cc = L.c(i, j, k);
            if (cc == 0) continue;
            for (int cidx = 0; cidx < n; ++cidx)
              if (pinv->at(cidx, k) != 0) coeffs[cidx] += w * cc * pinv->at(cidx, k);
          }
        }
      }
      out.set_bracket(a, b, std::move(coeffs));
    }
  return out;
}

} // namespace lieco
