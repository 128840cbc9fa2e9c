#include "lieco/cohomology.hpp"

#include <cassert>

namespace lieco {

namespace {

// Antisymmetric matrices are flattened over the (i < j) entries in
// lexicographic order; every solver below inherits determinism from that.
int pair_count(int n) { return n * (n - 1) / 2; }

int pair_index(int i, int j, int n) {
  assert(i < j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

RatVec flatten(const RatMat& gamma) {
  const int n = gamma.rows();
  RatVec v(pair_count(n));
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) v[idx++] = gamma.at(i, j);
  return v;
}

RatMat unflatten(const RatVec& v, int n) {
  RatMat m(n, n);
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m.at(i, j) = v[idx];
      m.at(j, i) = -v[idx];
      ++idx;
    }
  return m;
}

} // namespace

bool is_closed_two_form(const LieAlgebra& L, const CocycleMatrix& gamma) {
  const int n = L.dim();
  if (gamma.rows() != n || gamma.cols() != n || !gamma.is_antisymmetric()) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Rat s = 0;
        for (int m = 0; m < n; ++m)
          s += L.c(i, j, m) * gamma.at(m, k) + L.c(j, k, m) * gamma.at(m, i) +
               L.c(k, i, m) * gamma.at(m, j);
        if (s != 0) return false;
      }
  return true;
}

void require_two_cocycle(const LieAlgebra& L, const CocycleMatrix& gamma) {
  if (gamma.rows() != L.dim() || gamma.cols() != L.dim())
    throw DimensionMismatch("cocycle size does not match the algebra");
  if (!gamma.is_antisymmetric()) throw NotAntisymmetric("cocycle matrix is not antisymmetric");
  if (!is_closed_two_form(L, gamma))
    throw NotClosed("2-form is not closed on " + L.name());
}

CocycleMatrix coboundary_of(const LieAlgebra& L, const RatVec& mu) {
  const int n = L.dim();
  if (int(mu.size()) != n) throw DimensionMismatch("functional size");
  CocycleMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rat s = 0;
      for (int k = 0; k < n; ++k)
        if (mu[k] != 0) s += mu[k] * L.c(i, j, k);
      m.at(i, j) = s;
      m.at(j, i) = -s;
    }
  return m;
}

std::vector<CocycleMatrix> cocycle_space(const LieAlgebra& L) {
  const int n = L.dim();
  const int nv = pair_count(n);
  // closedness constraints, one row per basis triple
  std::vector<RatVec> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        RatVec row(nv, Rat(0));
        auto add = [&](int a, int b, const Rat& w) {
          if (w == 0 || a == b) return;
          if (a < b)
            row[pair_index(a, b, n)] += w;
          else
            row[pair_index(b, a, n)] -= w;
        };
        for (int m = 0; m < n; ++m) {
          add(m, k, L.c(i, j, m));
          add(m, i, L.c(j, k, m));
          add(m, j, L.c(k, i, m));
        }
        rows.push_back(std::move(row));
      }
  RatMat sys(std::max<int>(1, int(rows.size())), nv);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < nv; ++c) sys.at(int(r), c) = rows[r][c];
  std::vector<CocycleMatrix> basis;
  for (const RatVec& v : sys.nullspace()) basis.push_back(unflatten(v, n));
  return basis;
}

std::vector<CocycleMatrix> coboundary_space(const LieAlgebra& L) {
  const int n = L.dim();
  std::vector<RatVec> rows;
  for (int k = 0; k < n; ++k) {
    RatVec mu(n, Rat(0));
    mu[k] = 1;
    rows.push_back(flatten(coboundary_of(L, mu)));
  }
  std::vector<CocycleMatrix> basis;
  for (const RatVec& v : row_space_basis(rows)) basis.push_back(unflatten(v, n));
  return basis;
}

H2Report h2_report(const LieAlgebra& L) {
  H2Report r;
  r.z2_basis = cocycle_space(L);
  r.b2_basis = coboundary_space(L);
  r.z2_dim = int(r.z2_basis.size());
  r.b2_dim = int(r.b2_basis.size());
  r.h2_dim = r.z2_dim - r.b2_dim;
  return r;
}

DecomposeResult h2_decompose(const LieAlgebra& L, const CocycleMatrix& gamma) {
  require_two_cocycle(L, gamma);
  const int n = L.dim();
  const int nv = pair_count(n);
  // mu solves A mu = flatten(gamma), columns of A are the basis coboundaries
  RatMat a(nv, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) a.at(pair_index(i, j, n), k) = L.c(i, j, k);
  RatVec target = flatten(gamma);

  DecomposeResult out;
  if (auto mu = a.solve(target)) {
    out.trivial = true;
    out.mu = std::move(*mu);
    out.representative = CocycleMatrix(n, n);
    return out;
  }
  out.trivial = false;
  // reduce modulo B^2: eliminate the pivot entries of the RREF basis
  std::vector<RatVec> b2rows;
  for (int k = 0; k < n; ++k) {
    RatVec mu(n, Rat(0));
    mu[k] = 1;
    b2rows.push_back(flatten(coboundary_of(L, mu)));
  }
  RatVec v = target;
  for (const RatVec& row : row_space_basis(b2rows)) {
    int pivot = -1;
    for (int c = 0; c < nv; ++c)
      if (row[c] != 0) { pivot = c; break; }
    if (pivot < 0) continue;
    Rat f = v[pivot] / row[pivot];
    if (f == 0) continue;
    for (int c = 0; c < nv; ++c) v[c] -= f * row[c];
  }
  out.representative = unflatten(v, n);
  return out;
}

CentralExtension central_extension(const LieAlgebra& L, const CocycleMatrix& gamma,
                                   const std::string& central_name) {
  require_two_cocycle(L, gamma);
  const int n = L.dim();
  std::vector<std::string> names = L.basis_names();
  names.push_back(central_name);
  LieAlgebra ext(L.name() + "_ext", std::move(names));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatVec coeffs(n + 1, Rat(0));
      for (int k = 0; k < n; ++k) coeffs[k] = L.c(i, j, k);
      coeffs[n] = gamma.at(i, j);
      ext.set_bracket(i, j, std::move(coeffs));
    }
  // central generator brackets stay zero; closedness of gamma gives Jacobi
  assert(validate_algebra(ext).ok);
  CentralExtension out;
  out.extended = std::move(ext);
  out.gamma = gamma;
  out.central_index = n;
  return out;
}

CentralExtension pseudo_extension(const LieAlgebra& L, const RatVec& l0,
                                  const std::string& central_name) {
  return central_extension(L, coboundary_of(L, l0), central_name);
}

RatMat trivialize_pseudo_extension(const LieAlgebra& base, const CentralExtension& ext) {
  DecomposeResult dec = h2_decompose(base, ext.gamma);
  if (!dec.trivial)
    throw NotACoboundary("cocycle of the extension is not exact on " + base.name());
  const int n = base.dim();
  RatMat p(n + 1, n + 1);
  for (int i = 0; i < n; ++i) {
    p.at(i, i) = 1;
    p.at(n, i) = (*dec.mu)[i]; // X_i -> X_i + mu_i X0
  }
  p.at(n, n) = 1;

  // in the sheared basis every bracket loses its central component
  LieAlgebra check = change_basis(ext.extended, p, ext.extended.basis_names(), "check");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (check.c(i, j, n) != 0)
        throw std::logic_error("trivialization failed to clear the central terms");
  return p;
}

ContractionResult iw_contraction(const LieAlgebra& L, const std::vector<int>& sub_indices,
                                 const std::optional<CocycleMatrix>& gamma, int scale) {
  const int n = L.dim();
  std::vector<int> w(n, 1);
  for (int idx : sub_indices) {
    if (idx < 0 || idx >= n) throw DimensionMismatch("subalgebra index out of range");
    w[idx] = 0;
  }
  // the weight-0 span must close under the bracket
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (w[i] != 0 || w[j] != 0) continue;
      for (int k = 0; k < n; ++k)
        if (w[k] != 0 && L.c(i, j, k) != 0)
          throw NotASubalgebra("[" + L.basis_names()[i] + ", " + L.basis_names()[j] +
                               "] leaves the chosen span");
    }

  LieAlgebra contracted(L.name() + "_contracted", L.basis_names());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatVec coeffs(n, Rat(0));
      for (int k = 0; k < n; ++k) {
        int e = w[i] + w[j] - w[k];
        if (e == 0) coeffs[k] = L.c(i, j, k);
        // e > 0 is killed by the limit; e < 0 cannot happen on a subalgebra
      }
      contracted.set_bracket(i, j, std::move(coeffs));
    }

  ContractionResult out;
  out.algebra = std::move(contracted);
  out.weights = std::move(w);
  if (gamma) {
    require_two_cocycle(L, *gamma);
    CocycleMatrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int e = out.weights[i] + out.weights[j] - scale;
        if (e == 0) {
          g.at(i, j) = gamma->at(i, j);
          g.at(j, i) = -gamma->at(i, j);
        } else if (e < 0 && gamma->at(i, j) != 0) {
          throw DivergenceError("cocycle entry (" + L.basis_names()[i] + ", " +
                                L.basis_names()[j] + ") scales as a negative power");
        }
      }
    require_two_cocycle(out.algebra, g); // closed for the contracted brackets
    out.gamma = std::move(g);
  }
  return out;
}

} // namespace lieco
