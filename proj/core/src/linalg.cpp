#include "braidslice/linalg.hpp"

#include <algorithm>
#include <utility>

#include "braidslice/errors.hpp"

namespace braidslice {

RatMat::RatMat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("RatMat: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMat RatMat::identity(std::size_t n) {
  RatMat out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

RatMat RatMat::diagonal(std::span<const Rat> d) {
  RatMat out(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
  return out;
}

RatMat RatMat::from_rows(std::span<const RatVec> rows) {
  if (rows.empty()) return {};
  RatMat out(0, rows.front().size());
  for (const auto& r : rows) out.append_row(r);
  return out;
}

RatMat RatMat::from_columns(std::span<const RatVec> cols) {
  if (cols.empty()) return {};
  return from_rows(cols).transpose();
}

RatVec RatMat::column(std::size_t c) const {
  RatVec out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

void RatMat::append_row(std::span<const Rat> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw DimensionMismatch("RatMat::append_row: width mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

RatMat RatMat::transpose() const {
  RatMat out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

bool RatMat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("RatMat product: inner dimensions differ");
  RatMat out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

RatVec operator*(const RatMat& a, std::span<const Rat> x) {
  if (a.cols_ != x.size()) throw DimensionMismatch("RatMat * vector: dimension mismatch");
  RatVec out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) out[i] = dot(a.row(i), x);
  return out;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

std::size_t rank(const RatMat& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      const BigInt d = m(r, c).den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      a[r][c] = m(r, c).num() * (l / m(r, c).den());
    }
  }

  // Bareiss: every intermediate division is exact.
  BigInt prev = 1;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rk]);
    for (std::size_t r = rk + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[r][k] * a[rk][c] - a[r][c] * a[rk][k]);
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

Inertia signature(const RatMat& s) {
  if (!s.is_symmetric()) throw NotSymmetric("signature: matrix is not symmetric");
  std::vector<std::size_t> live(s.rows());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  RatMat a = s;
  Inertia out;

  auto drop = [&](std::size_t idx) { live.erase(std::find(live.begin(), live.end(), idx)); };

  while (!live.empty()) {
    // Diagonal pivot if any.
    auto diag = std::find_if(live.begin(), live.end(), [&](std::size_t i) { return !a(i, i).is_zero(); });
    if (diag != live.end()) {
      const std::size_t p = *diag;
      const Rat pivot = a(p, p);
      (pivot.sign() > 0 ? out.positive : out.negative) += 1;
      drop(p);
      for (std::size_t r : live) {
        if (a(r, p).is_zero()) continue;
        const Rat f = a(r, p) / pivot;
        for (std::size_t c : live) a(r, c) -= f * a(p, c);
      }
      continue;
    }
    // All live diagonal entries vanish: look for a hyperbolic 2x2 block.
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t x = 0; x < live.size() && !found; ++x) {
      for (std::size_t y = x + 1; y < live.size(); ++y) {
        if (!a(live[x], live[y]).is_zero()) {
          bi = live[x];
          bj = live[y];
          found = true;
          break;
        }
      }
    }
    if (!found) {
      out.zero += live.size();
      break;
    }
    out.positive += 1;
    out.negative += 1;
    const Rat off = a(bi, bj);
    drop(bi);
    drop(bj);
    // Schur complement against [[0, off], [off, 0]].
    std::vector<Rat> ri, rj;
    for (std::size_t r : live) {
      ri.push_back(a(r, bi));
      rj.push_back(a(r, bj));
    }
    for (std::size_t x = 0; x < live.size(); ++x) {
      for (std::size_t y = 0; y < live.size(); ++y) {
        const Rat t = ri[x] * rj[y] + rj[x] * ri[y];
        if (!t.is_zero()) a(live[x], live[y]) -= t / off;
      }
    }
  }
  return out;
}

std::optional<RatVec> solve(const RatMat& a, std::span<const Rat> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw DimensionMismatch("solve: expected a square system");
  RatMat m = a;
  RatVec rhs(b.begin(), b.end());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(piv, k), m(c, k));
      std::swap(rhs[piv], rhs[c]);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c).is_zero()) continue;
      const Rat f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
      rhs[r] -= f * rhs[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m(i, i);
  return rhs;
}

RatMat nullspace(const RatMat& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  RatMat a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(piv, k), a(r, k));
    }
    const Rat inv = Rat(1) / a(r, c);
    for (std::size_t k = 0; k < cols; ++k) a(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rat f = a(i, c);
      for (std::size_t k = 0; k < cols; ++k) a(i, k) -= f * a(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<RatVec> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
    RatVec v(cols);
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, c);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return RatMat(cols, 0);
  return RatMat::from_columns(basis);
}

std::optional<RatVec> project_out(std::span<const Rat> u, const RatMat& b) {
  if (b.rows() != u.size()) throw DimensionMismatch("project_out: basis height differs from vector length");
  const RatMat bt = b.transpose();
  auto coeffs = solve(bt * b, bt * u);
  if (!coeffs) return std::nullopt;
  RatVec out(u.begin(), u.end());
  const RatVec p = b * std::span<const Rat>(*coeffs);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= p[i];
  return out;
}

std::string to_string(std::span<const Rat> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

}  // namespace braidslice
