#include "braidslice/lp.hpp"

#include <limits>
#include <utility>

#include "braidslice/errors.hpp"

namespace braidslice {
namespace {

enum class LpStatus { kInfeasible, kUnbounded, kOptimal };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  RatVec x;
};

// Dictionary-form simplex with Bland's rule over variables z (free) and slacks
// (nonnegative). Row i reads: basic[i] = t[i][0] + sum_j t[i][j+1] * nonbasic[j].
class Dictionary {
 public:
  Dictionary(const RatMat& a, const RatVec& b, const RatVec& c)
      : nz_(a.cols()), rows_(a.rows()), cols_(a.cols()) {
    t_.assign(rows_, RatVec(cols_ + 1));
    for (std::size_t i = 0; i < rows_; ++i) {
      t_[i][0] = -b[i];
      for (std::size_t j = 0; j < cols_; ++j) t_[i][j + 1] = a(i, j);
      basic_.push_back(nz_ + i);
    }
    for (std::size_t j = 0; j < cols_; ++j) nonbasic_.push_back(j);
    frozen_.assign(cols_, false);
    free_row_.assign(rows_, false);
    obj_.assign(cols_ + 1, Rat());
    for (std::size_t j = 0; j < c.size(); ++j) obj_[j + 1] = c[j];
  }

  // Moves every free variable into the basis. Returns false when the
  // objective can grow along a direction no constraint sees.
  bool absorb_free_variables() {
    bool bounded = true;
    for (std::size_t col = 0; col < cols_; ++col) {
      if (!is_free(nonbasic_[col])) continue;
      std::size_t best = rows_;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (free_row_[r] || t_[r][col + 1].is_zero()) continue;
        best = r;
        break;
      }
      if (best == rows_) {
        frozen_[col] = true;
        if (!obj_[col + 1].is_zero()) bounded = false;
        continue;
      }
      pivot(best, col);
      free_row_[best] = true;
    }
    return bounded;
  }

  // Chvatal's single-artificial phase one. Returns false when infeasible.
  bool make_feasible() {
    std::size_t worst = rows_;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (free_row_[r] || t_[r][0].sign() >= 0) continue;
      if (worst == rows_ || t_[r][0] < t_[worst][0]) worst = r;
    }
    if (worst == rows_) return true;

    const std::size_t art_id = nz_ + rows_;
    const std::size_t art_col = cols_;
    for (std::size_t r = 0; r < rows_; ++r) t_[r].push_back(free_row_[r] ? Rat() : Rat(1));
    obj_.push_back(Rat());
    aux_.assign(cols_ + 2, Rat());
    aux_[art_col + 1] = -1;
    nonbasic_.push_back(art_id);
    frozen_.push_back(false);
    ++cols_;

    pivot(worst, art_col);
    run(aux_);
    if (aux_[0].sign() < 0) return false;

    // The artificial may still be basic at level zero.
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basic_[r] != art_id) continue;
      for (std::size_t col = 0; col < cols_; ++col) {
        if (frozen_[col] || t_[r][col + 1].is_zero()) continue;
        pivot(r, col);
        break;
      }
      break;
    }
    for (std::size_t col = 0; col < cols_; ++col) {
      if (nonbasic_[col] == art_id) frozen_[col] = true;
    }
    aux_.clear();
    return true;
  }

  // Returns false when unbounded.
  bool optimize() { return run(obj_); }

  [[nodiscard]] RatVec z_values() const {
    RatVec z(nz_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basic_[r] < nz_) z[basic_[r]] = t_[r][0];
    }
    return z;
  }

 private:
  [[nodiscard]] bool is_free(std::size_t var) const { return var < nz_; }

  bool run(const RatVec& objective) {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t col = 0; col < cols_; ++col) {
        if (frozen_[col] || objective[col + 1].sign() <= 0) continue;
        if (enter == cols_ || nonbasic_[col] < nonbasic_[enter]) enter = col;
      }
      if (enter == cols_) return true;

      std::size_t leave = rows_;
      Rat best;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (free_row_[r]) continue;
        const Rat& coef = t_[r][enter + 1];
        if (coef.sign() >= 0) continue;
        Rat ratio = t_[r][0] / -coef;
        if (leave == rows_ || ratio < best || (ratio == best && basic_[r] < basic_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == rows_) return false;
      pivot(leave, enter);
    }
  }

  static void substitute(RatVec& row, std::size_t col, const RatVec& expr) {
    const Rat coef = row[col + 1];
    if (coef.is_zero()) return;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j == col + 1) {
        row[j] = coef * expr[j];
      } else if (!expr[j].is_zero()) {
        row[j] += coef * expr[j];
      }
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    RatVec& row = t_[r];
    const Rat a = row[col + 1];
    const Rat inv = Rat(1) / a;
    // Solve row r for the entering variable.
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j == col + 1) {
        row[j] = inv;
      } else if (!row[j].is_zero()) {
        row[j] = -row[j] * inv;
      }
    }
    std::swap(basic_[r], nonbasic_[col]);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != r) substitute(t_[i], col, row);
    }
    substitute(obj_, col, row);
    if (!aux_.empty()) substitute(aux_, col, row);
  }

  std::size_t nz_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RatVec> t_;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
  std::vector<bool> frozen_;
  std::vector<bool> free_row_;
  RatVec obj_;
  RatVec aux_;
};

// Reduces E x = f to x = x0 + N z. Returns false when inconsistent.
bool eliminate_equalities(const RatMat& e, const RatVec& f, std::size_t dim, RatVec& x0, RatMat& n) {
  x0.assign(dim, Rat());
  if (e.rows() == 0) {
    n = RatMat::identity(dim);
    return true;
  }
  RatMat a = e;
  RatVec rhs = f;
  const std::size_t rows = a.rows();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t k = 0; k < dim; ++k) std::swap(a(piv, k), a(r, k));
      std::swap(rhs[piv], rhs[r]);
    }
    const Rat inv = Rat(1) / a(r, c);
    for (std::size_t k = 0; k < dim; ++k) a(r, k) *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rat fct = a(i, c);
      for (std::size_t k = 0; k < dim; ++k) a(i, k) -= fct * a(r, k);
      rhs[i] -= fct * rhs[r];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!rhs[i].is_zero()) return false;
  }
  std::vector<std::size_t> free_cols;
  std::vector<bool> is_pivot(dim, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < dim; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  for (std::size_t i = 0; i < pivots.size(); ++i) x0[pivots[i]] = rhs[i];
  n = RatMat(dim, free_cols.size());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    n(free_cols[t], t) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) n(pivots[i], t) = -a(i, free_cols[t]);
  }
  return true;
}

// maximize c.x subject to A x >= b, E x = f; an empty c asks for feasibility only.
LpResult solve_lp(const RatMat& a, const RatVec& b, const RatMat& e, const RatVec& f, const RatVec& c) {
  const std::size_t dim = a.rows() > 0 ? a.cols() : e.cols();
  if (a.rows() > 0 && e.rows() > 0 && a.cols() != e.cols()) {
    throw DimensionMismatch("LP: inequality and equality blocks have different widths");
  }
  if (b.size() != a.rows() || f.size() != e.rows()) throw DimensionMismatch("LP: right-hand side length mismatch");

  RatVec x0;
  RatMat n;
  if (!eliminate_equalities(e, f, dim, x0, n)) return {};

  const RatVec ax0 = a.rows() > 0 ? a * std::span<const Rat>(x0) : RatVec{};
  RatMat an = a.rows() > 0 ? a * n : RatMat(0, n.cols());
  RatVec bn(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) bn[i] = b[i] - ax0[i];
  RatVec cn;
  if (!c.empty()) {
    cn.assign(n.cols(), Rat());
    for (std::size_t j = 0; j < n.cols(); ++j) {
      for (std::size_t i = 0; i < dim; ++i) {
        if (!c[i].is_zero() && !n(i, j).is_zero()) cn[j] += c[i] * n(i, j);
      }
    }
  }
  // Keep the column count of an even with zero inequality rows.
  if (an.rows() == 0) an = RatMat(0, n.cols());

  Dictionary dict(an, bn, cn);
  const bool bounded_free = dict.absorb_free_variables();
  if (!dict.make_feasible()) return {};
  LpResult out;
  out.status = LpStatus::kOptimal;
  if (!c.empty()) {
    if (!bounded_free || !dict.optimize()) out.status = LpStatus::kUnbounded;
  }
  const RatVec z = dict.z_values();
  out.x = x0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (!n(i, j).is_zero() && !z[j].is_zero()) out.x[i] += n(i, j) * z[j];
    }
  }
  return out;
}

void check_equalities(const RatMat& e, const RatVec& f, const RatVec& x) {
  for (std::size_t i = 0; i < e.rows(); ++i) {
    if (dot(e.row(i), x) != f[i]) throw Error(ErrorKind::kInternal, "LP witness violates an equality");
  }
}

}  // namespace

Witness feasible_strict(const RatMat& a, const RatMat& e) {
  const RatVec ones(a.rows(), Rat(1));
  const RatVec zeros(e.rows());
  LpResult res = solve_lp(a, ones, e, zeros, {});
  if (res.status == LpStatus::kInfeasible) return std::nullopt;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (dot(a.row(i), res.x).sign() <= 0) throw Error(ErrorKind::kInternal, "LP witness is not strictly feasible");
  }
  check_equalities(e, zeros, res.x);
  return std::move(res.x);
}

Witness feasible_affine_strict(const RatMat& a, const RatVec& b, const RatMat& e, const RatVec& f) {
  const std::size_t dim = a.rows() > 0 ? a.cols() : e.cols();
  RatMat ext(0, dim + 1);
  RatVec rhs;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    RatVec row(a.row(i).begin(), a.row(i).end());
    row.emplace_back(-1);
    ext.append_row(row);
    rhs.push_back(b[i]);
  }
  RatVec cap(dim + 1);
  cap[dim] = -1;
  ext.append_row(cap);
  rhs.emplace_back(-1);

  RatMat eext(0, dim + 1);
  for (std::size_t i = 0; i < e.rows(); ++i) {
    RatVec row(e.row(i).begin(), e.row(i).end());
    row.emplace_back(0);
    eext.append_row(row);
  }
  RatVec objective(dim + 1);
  objective[dim] = 1;

  LpResult res = solve_lp(ext, rhs, eext, f, objective);
  if (res.status == LpStatus::kInfeasible) return std::nullopt;
  if (res.status == LpStatus::kUnbounded) throw Error(ErrorKind::kInternal, "margin LP reported unbounded");
  if (res.x[dim].sign() <= 0) return std::nullopt;
  res.x.pop_back();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (dot(a.row(i), res.x) <= b[i]) throw Error(ErrorKind::kInternal, "LP witness is not strictly feasible");
  }
  check_equalities(e, f, res.x);
  return std::move(res.x);
}

Witness feasible_affine(const RatMat& a, const RatVec& b, const RatMat& e, const RatVec& f) {
  LpResult res = solve_lp(a, b, e, f, {});
  if (res.status == LpStatus::kInfeasible) return std::nullopt;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (dot(a.row(i), res.x) < b[i]) throw Error(ErrorKind::kInternal, "LP witness violates an inequality");
  }
  check_equalities(e, f, res.x);
  return std::move(res.x);
}

}  // namespace braidslice
