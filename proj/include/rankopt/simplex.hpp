/*
 * Copyright 2026 The rankopt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * \file rankopt/simplex.hpp
 *
 * \brief Phase-I simplex for polyhedra {lambda : M lambda = b, <1,lambda> = 1,
 *  lambda >= 0}.
 *
 * Such a polyhedron is non-empty iff b lies in the convex hull of the columns
 * of M. The solver minimises the sum of artificial variables with a revised
 * simplex (explicit basis inverse, periodically refactored) under Bland's
 * rule. A non-empty verdict carries a feasible lambda; an empty verdict
 * carries an axis omega with <omega, M_j - b> >= margin > 0 for every
 * column j, obtained from the phase-I dual.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rankopt/error.hpp"

namespace rankopt {

/// Dense column-major matrix; columns are the natural unit here.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Builds a matrix whose j-th column is columns[j].
  static Matrix from_columns(const std::vector<std::vector<double>>& columns) {
    if (columns.empty()) return Matrix();
    Matrix m(columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != m.rows_) throw InvalidParameter("Matrix: ragged columns");
      std::copy(columns[j].begin(), columns[j].end(), m.col_ptr(j));
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

  std::span<const double> col(std::size_t j) const { return {data_.data() + j * rows_, rows_}; }
  double* col_ptr(std::size_t j) { return data_.data() + j * rows_; }

  /// Appends a column; an empty matrix adopts its length as the row count.
  void push_column(std::span<const double> c) {
    if (cols_ == 0 && rows_ == 0) rows_ = c.size();
    if (c.size() != rows_) throw InvalidParameter("Matrix: column length mismatch");
    data_.insert(data_.end(), c.begin(), c.end());
    ++cols_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct FeasibilityProblem {
  Matrix M;               ///< m x t
  std::vector<double> b;  ///< length m
};

enum class Feasibility { empty, nonempty };

struct FeasibilityResult {
  Feasibility verdict = Feasibility::nonempty;
  std::vector<double> lambda;  ///< feasible point when nonempty
  std::vector<double> axis;    ///< separating axis when empty, max-norm 1
  double margin = 0.0;         ///< min_j <axis, M_j - b> when empty
  double residual = 0.0;       ///< max violation of the constraints by lambda when nonempty
  std::vector<std::size_t> basis;  ///< structural columns in the final basis
  std::size_t iterations = 0;

  bool empty() const noexcept { return verdict == Feasibility::empty; }
};

struct SimplexOptions {
  double tol = 1e-9;                 ///< phase-I objective below this => nonempty
  double pivot_tol = 1e-11;          ///< smallest admissible pivot magnitude
  double cost_tol = 1e-12;           ///< reduced costs above -cost_tol are optimal
  std::size_t refactor_every = 40;   ///< basis inverse recomputed from scratch this often
  std::size_t iteration_factor = 50; ///< cap = iteration_factor * (m + t)
};

namespace detail {

// Gauss-Jordan inverse with partial pivoting. Returns false when singular.
inline bool invert_dense(std::vector<double>& a, std::size_t n) {
  std::vector<double> inv(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[p * n + c])) p = r;
    if (std::abs(a[p * n + c]) < 1e-14) return false;
    if (p != c)
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a[p * n + k], a[c * n + k]);
        std::swap(inv[p * n + k], inv[c * n + k]);
      }
    const double piv = a[c * n + c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c * n + k] /= piv;
      inv[c * n + k] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r * n + c];
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        a[r * n + k] -= f * a[c * n + k];
        inv[r * n + k] -= f * inv[c * n + k];
      }
    }
  }
  a.swap(inv);
  return true;
}

class Phase1 {
 public:
  Phase1(const FeasibilityProblem& p, const SimplexOptions& opt)
      : M_(p.M), b_(p.b), opt_(opt), m_(p.M.rows()), t_(p.M.cols()), R_(m_ + 1) {
    if (p.b.size() != m_) throw InvalidParameter("phase1_simplex: b length differs from M rows");
    if (t_ == 0) throw InvalidParameter("phase1_simplex: need at least one column");
    sign_.assign(R_, 1.0);
    rhs_.assign(R_, 1.0);
    for (std::size_t i = 0; i < m_; ++i) {
      rhs_[i] = b_[i];
      if (!std::isfinite(b_[i])) throw InvalidParameter("phase1_simplex: non-finite b");
      if (b_[i] < 0) {
        sign_[i] = -1.0;
        rhs_[i] = -b_[i];
      }
    }
    for (std::size_t j = 0; j < t_; ++j)
      for (double v : M_.col(j))
        if (!std::isfinite(v)) throw InvalidParameter("phase1_simplex: non-finite M");
    basis_.resize(R_);
    is_basic_.assign(t_ + R_, false);
    for (std::size_t i = 0; i < R_; ++i) {
      basis_[i] = t_ + i;
      is_basic_[t_ + i] = true;
    }
    binv_.assign(R_ * R_, 0.0);
    for (std::size_t i = 0; i < R_; ++i) binv_[i * R_ + i] = 1.0;
    xb_ = rhs_;
    col_.resize(R_);
    u_.resize(R_);
    y_.resize(R_);
  }

  FeasibilityResult solve() {
    const std::size_t cap = opt_.iteration_factor * (m_ + t_);
    std::size_t since_refactor = 0;
    std::size_t iter = 0;
    for (;; ++iter) {
      if (iter > cap)
        throw NumericalFailure("phase1_simplex: iteration cap exceeded (" + std::to_string(cap) + ")");
      compute_duals();
      const std::size_t enter = choose_entering();
      if (enter == kNone) break;
      column(enter, col_);
      multiply_binv(col_, u_);
      const std::size_t leave = choose_leaving();
      if (leave == kNone) {
        // Unbounded direction cannot occur for a bounded-below phase-I
        // objective; treat as loss of accuracy.
        refactor();
        throw NumericalFailure("phase1_simplex: no admissible leaving row");
      }
      pivot(leave, enter);
      if (++since_refactor >= opt_.refactor_every) {
        refactor();
        since_refactor = 0;
      }
    }
    refactor();
    compute_duals();
    return finish(iter);
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  static constexpr double kRatioTie = 1e-13;

  double cost(std::size_t j) const { return j < t_ ? 0.0 : 1.0; }

  void column(std::size_t j, std::vector<double>& out) const {
    if (j < t_) {
      const auto c = M_.col(j);
      for (std::size_t i = 0; i < m_; ++i) out[i] = sign_[i] * c[i];
      out[m_] = 1.0;
    } else {
      std::fill(out.begin(), out.end(), 0.0);
      out[j - t_] = 1.0;
    }
  }

  // y^T a_j for the (sign-adjusted) column j without materialising it.
  double dual_dot(std::size_t j) const {
    if (j >= t_) return y_[j - t_];
    const auto c = M_.col(j);
    double s = y_[m_];
    for (std::size_t i = 0; i < m_; ++i) s += y_[i] * sign_[i] * c[i];
    return s;
  }

  void multiply_binv(const std::vector<double>& v, std::vector<double>& out) const {
    for (std::size_t i = 0; i < R_; ++i) {
      double s = 0.0;
      const double* row = &binv_[i * R_];
      for (std::size_t k = 0; k < R_; ++k) s += row[k] * v[k];
      out[i] = s;
    }
  }

  void compute_duals() {
    std::fill(y_.begin(), y_.end(), 0.0);
    for (std::size_t i = 0; i < R_; ++i) {
      const double cb = cost(basis_[i]);
      if (cb == 0.0) continue;
      const double* row = &binv_[i * R_];
      for (std::size_t k = 0; k < R_; ++k) y_[k] += cb * row[k];
    }
  }

  // Bland: lowest-index column with negative reduced cost.
  std::size_t choose_entering() const {
    for (std::size_t j = 0; j < t_ + R_; ++j) {
      if (is_basic_[j]) continue;
      if (cost(j) - dual_dot(j) < -opt_.cost_tol) return j;
    }
    return kNone;
  }

  // Minimum ratio; ties go to the basic variable with the lowest index.
  std::size_t choose_leaving() const {
    std::size_t best = kNone;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < R_; ++i) {
      if (u_[i] <= opt_.pivot_tol) continue;
      const double ratio = std::max(xb_[i], 0.0) / u_[i];
      if (best == kNone || ratio < best_ratio - kRatioTie) {
        best = i;
        best_ratio = ratio;
      } else if (ratio <= best_ratio + kRatioTie && basis_[i] < basis_[best]) {
        best = i;
      }
    }
    return best;
  }

  void pivot(std::size_t r, std::size_t enter) {
    const double piv = u_[r];
    const double theta = std::max(xb_[r], 0.0) / piv;
    for (std::size_t i = 0; i < R_; ++i)
      if (i != r) xb_[i] -= theta * u_[i];
    xb_[r] = theta;
    double* prow = &binv_[r * R_];
    for (std::size_t k = 0; k < R_; ++k) prow[k] /= piv;
    for (std::size_t i = 0; i < R_; ++i) {
      if (i == r || u_[i] == 0.0) continue;
      double* row = &binv_[i * R_];
      const double f = u_[i];
      for (std::size_t k = 0; k < R_; ++k) row[k] -= f * prow[k];
    }
    is_basic_[basis_[r]] = false;
    is_basic_[enter] = true;
    basis_[r] = enter;
  }

  void refactor() {
    std::vector<double> B(R_ * R_);
    for (std::size_t c = 0; c < R_; ++c) {
      column(basis_[c], col_);
      for (std::size_t r = 0; r < R_; ++r) B[r * R_ + c] = col_[r];
    }
    if (!invert_dense(B, R_)) return;  // keep the updated inverse
    binv_.swap(B);
    multiply_binv(rhs_, xb_);
  }

  FeasibilityResult finish(std::size_t iters) const {
    FeasibilityResult res;
    res.iterations = iters;
    for (std::size_t i = 0; i < R_; ++i)
      if (basis_[i] < t_) res.basis.push_back(basis_[i]);
    double w = 0.0;
    for (std::size_t i = 0; i < R_; ++i)
      if (basis_[i] >= t_) w += std::max(xb_[i], 0.0);

    if (w <= opt_.tol) {
      res.verdict = Feasibility::nonempty;
      res.lambda.assign(t_, 0.0);
      for (std::size_t i = 0; i < R_; ++i)
        if (basis_[i] < t_) res.lambda[basis_[i]] = std::max(xb_[i], 0.0);
      res.residual = lambda_residual(res.lambda);
      return res;
    }

    res.verdict = Feasibility::empty;
    // Farkas multipliers in the original row orientation; omega = -y[0..m).
    res.axis.resize(m_);
    double norm = 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      res.axis[i] = -sign_[i] * y_[i];
      norm = std::max(norm, std::abs(res.axis[i]));
    }
    if (norm > 0.0)
      for (double& a : res.axis) a /= norm;
    res.margin = axis_margin(res.axis);
    return res;
  }

  double lambda_residual(const std::vector<double>& lambda) const {
    double r = 0.0, sum = 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      double s = -b_[i];
      for (std::size_t j = 0; j < t_; ++j) s += M_(i, j) * lambda[j];
      r = std::max(r, std::abs(s));
    }
    for (double l : lambda) {
      sum += l;
      r = std::max(r, -l);
    }
    return std::max(r, std::abs(sum - 1.0));
  }

  double axis_margin(const std::vector<double>& axis) const {
    double mn = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < t_; ++j) {
      const auto c = M_.col(j);
      double s = 0.0;
      for (std::size_t i = 0; i < m_; ++i) s += axis[i] * (c[i] - b_[i]);
      mn = std::min(mn, s);
    }
    return mn;
  }

  const Matrix& M_;
  const std::vector<double>& b_;
  SimplexOptions opt_;
  std::size_t m_, t_, R_;
  std::vector<double> sign_, rhs_;
  std::vector<std::size_t> basis_;
  std::vector<bool> is_basic_;
  std::vector<double> binv_;  // row-major R x R
  std::vector<double> xb_, col_, u_, y_;
};

}  // namespace detail

/**
 * \brief Decides whether {lambda : M lambda = b, sum(lambda) = 1, lambda >= 0}
 *  is empty.
 *
 * Deterministic for a fixed input. Throws NumericalFailure when the
 * iteration cap 50 (m + t) is exceeded.
 */
inline FeasibilityResult phase1_simplex(const FeasibilityProblem& problem,
                                        const SimplexOptions& options = {}) {
  if (!(options.tol > 0.0)) throw InvalidParameter("phase1_simplex: tol must be > 0");
  return detail::Phase1(problem, options).solve();
}

inline FeasibilityResult phase1_simplex(const FeasibilityProblem& problem, double tol) {
  SimplexOptions o;
  o.tol = tol;
  return phase1_simplex(problem, o);
}

/// Checks a result's certificate against the problem; returns the worst violation
/// (<= 0 is a fully verified certificate up to \p tol).
inline double certificate_violation(const FeasibilityProblem& p, const FeasibilityResult& r,
                                    double tol = 1e-9) {
  const std::size_t m = p.M.rows(), t = p.M.cols();
  if (r.empty()) {
    if (r.axis.size() != m) return std::numeric_limits<double>::infinity();
    double mn = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < t; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < m; ++i) s += r.axis[i] * (p.M(i, j) - p.b[i]);
      mn = std::min(mn, s);
    }
    // a separating axis needs a strictly positive margin
    return mn > tol ? 0.0 : tol - mn;
  }
  if (r.lambda.size() != t) return std::numeric_limits<double>::infinity();
  double worst = 0.0, sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double s = -p.b[i];
    for (std::size_t j = 0; j < t; ++j) s += p.M(i, j) * r.lambda[j];
    worst = std::max(worst, std::abs(s));
  }
  for (double l : r.lambda) {
    sum += l;
    worst = std::max(worst, -l);
  }
  worst = std::max(worst, std::abs(sum - 1.0));
  return worst <= tol ? 0.0 : worst - tol;
}

}  // namespace rankopt
