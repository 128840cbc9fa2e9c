#include "lieco/ratmat.hpp"

#include <cassert>
#include <stdexcept>

namespace lieco {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMat RatMat::operator*(const RatMat& o) const {
  assert(cols_ == o.rows_);
  RatMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o.at(k, j) != 0) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  RatMat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  RatMat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
  return r;
}

RatMat RatMat::scaled(const Rat& s) const {
  RatMat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) * s;
  return r;
}

RatVec RatMat::apply(const RatVec& v) const {
  assert(int(v.size()) == cols_);
  RatVec r(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

RatVec RatMat::apply_left(const RatVec& v) const {
  assert(int(v.size()) == rows_);
  RatVec r(cols_, Rat(0));
  for (int i = 0; i < rows_; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[j] += v[i] * at(i, j);
  }
  return r;
}

bool RatMat::operator==(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

bool RatMat::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

bool RatMat::is_antisymmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

std::vector<int> RatMat::rref() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = -1;
    for (int i = r; i < rows_; ++i)
      if (at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
    Rat inv = 1 / at(r, c);
    for (int j = 0; j < cols_; ++j) at(r, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      Rat f = at(i, c);
      for (int j = 0; j < cols_; ++j) at(i, j) -= f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int RatMat::rank() const {
  RatMat tmp = *this;
  return int(tmp.rref().size());
}

std::vector<RatVec> RatMat::nullspace() const {
  RatMat tmp = *this;
  std::vector<int> pivots = tmp.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols_, Rat(0));
    v[f] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -tmp.at(int(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatMat> RatMat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  RatMat aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  std::vector<int> pivots = aug.rref();
  if (int(pivots.size()) != rows_ || pivots.back() >= cols_) {
    // a pivot fell outside the left block <=> singular
    for (size_t r = 0; r < pivots.size(); ++r)
      if (pivots[r] >= cols_) return std::nullopt;
    if (int(pivots.size()) != rows_) return std::nullopt;
  }
  RatMat inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

std::optional<RatVec> RatMat::solve(const RatVec& b) const {
  assert(int(b.size()) == rows_);
  RatMat aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<int> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt; // inconsistent
  RatVec x(cols_, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(int(r), cols_);
  return x;
}

std::vector<RatVec> row_space_basis(const std::vector<RatVec>& rows) {
  if (rows.empty()) return {};
  int cols = int(rows[0].size());
  RatMat m(int(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (int(rows[i].size()) != cols) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < cols; ++j) m.at(int(i), j) = rows[i][j];
  }
  size_t rank = m.rref().size();
  std::vector<RatVec> basis;
  for (size_t r = 0; r < rank; ++r) {
    RatVec v(cols);
    for (int j = 0; j < cols; ++j) v[j] = m.at(int(r), j);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool same_span(const std::vector<RatVec>& a, const std::vector<RatVec>& b) {
  std::vector<RatVec> joint = a;
  joint.insert(joint.end(), b.begin(), b.end());
  size_t ra = row_space_basis(a).size();
  size_t rb = row_space_basis(b).size();
  size_t rj = joint.empty() ? 0 : row_space_basis(joint).size();
  return ra == rb && rb == rj;
}

SkewNormalForm skew_normal_form(const RatMat& omega) {
  assert(omega.rows() == omega.cols());
  const int n = omega.rows();
  auto form = [&omega](const RatVec& u, const RatVec& v) {
    Rat s = 0;
    for (int i = 0; i < omega.rows(); ++i) {
      if (u[i] == 0) continue;
      for (int j = 0; j < omega.cols(); ++j)
        if (omega.at(i, j) != 0 && v[j] != 0) s += u[i] * omega.at(i, j) * v[j];
    }
    return s;
  };

  // Working pool: the standard basis; peel off hyperbolic pairs.
  std::vector<RatVec> pool;
  for (int i = 0; i < n; ++i) {
    RatVec e(n, Rat(0));
    e[i] = 1;
    pool.push_back(std::move(e));
  }
  std::vector<RatVec> pairs;

  while (true) {
    int iu = -1, iv = -1;
    for (size_t a = 0; a < pool.size() && iu < 0; ++a)
      for (size_t b = a + 1; b < pool.size(); ++b)
        if (form(pool[a], pool[b]) != 0) {
          iu = int(a);
          iv = int(b);
          break;
        }
    if (iu < 0) break;
    RatVec u = pool[iu];
    RatVec v = pool[iv];
    Rat w = form(u, v);
    for (int i = 0; i < n; ++i) v[i] /= w; // omega(u, v) = 1
    pool.erase(pool.begin() + iv);
    pool.erase(pool.begin() + iu);
    // symplectic reduction of the remaining pool against the pair
    for (RatVec& p : pool) {
      Rat a = form(p, v);
      Rat b = form(u, p);
      for (int i = 0; i < n; ++i) p[i] -= a * u[i] + b * v[i];
    }
    pairs.push_back(std::move(u));
    pairs.push_back(std::move(v));
  }

  // Remaining pool spans the kernel but may be linearly dependent.
  std::vector<RatVec> kernel = row_space_basis(pool);

  SkewNormalForm out;
  out.rank = int(pairs.size());
  out.basis = RatMat(n, int(pairs.size() + kernel.size()));
  int col = 0;
  for (const RatVec& v : pairs) {
    for (int i = 0; i < n; ++i) out.basis.at(i, col) = v[i];
    ++col;
  }
  for (const RatVec& v : kernel) {
    for (int i = 0; i < n; ++i) out.basis.at(i, col) = v[i];
    ++col;
  }
  return out;
}

} // namespace lieco
