// Copyright 2026 The binv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "binv/simplex.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace binv {

namespace {

using Rational = boost::multiprecision::cpp_rational;

template <class T>
double to_double(const T& v) {
  if constexpr (std::is_same_v<T, double>) return v;
  else return static_cast<double>(v);
}

template <class T>
T abs_val(const T& v) {
  return v < T(0) ? T(-v) : v;
}

// Exact binary value of a double as a rational.
Rational exact_rational(double x) {
  if (x == 0.0) return 0;
  int exp = 0;
  double mantissa = std::frexp(x, &exp);  // x = mantissa * 2^exp
  long long m = static_cast<long long>(std::ldexp(mantissa, 53));
  int shift = exp - 53;
  Rational r(m);
  boost::multiprecision::cpp_int one(1);
  if (shift >= 0)
    r *= Rational(one << shift);
  else
    r /= Rational(one << -shift);
  return r;
}

// Nearest rational with bounded denominator, by continued fractions.
Rational rationalize(double x, long max_den) {
  if (x == 0.0) return 0;
  if (std::floor(x) == x && std::abs(x) < 1e15)
    return Rational(static_cast<long long>(x));
  bool neg = x < 0;
  double v = neg ? -x : x;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(frac);
    if (fl > 9e17) break;
    long long a = static_cast<long long>(fl);
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 <= 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return Rational(static_cast<long long>(std::llround(v)));
  Rational r(p1, q1);
  if (std::abs(static_cast<double>(r) - v) > 1e-6 * std::max(1.0, v))
    r = Rational(static_cast<long long>(std::llround(v * 1e9)), 1000000000LL);
  return neg ? -r : r;
}

// Dense two-phase tableau simplex over an ordered field.
//
// Column layout: [structural | slacks (one per inequality) | artificials].
// Inequality rows with nonnegative rhs start with their slack basic;
// everything else gets an artificial. Entering variable: largest reduced
// cost, ties to the smallest column index. Leaving row: lexicographic ratio
// test, which terminates under any entering rule and keeps the pivot
// sequence a deterministic function of the input. Artificials may never
// re-enter the basis once they leave it.
//
// The double instantiation snaps sub-1e-11 residue to zero after each pivot;
// cancellation noise otherwise masquerades as pivot candidates and grinds
// degenerate phase-1 bases into an inconsistent tableau.
template <class T>
class Tableau {
 public:
  Tableau(int num_vars, const std::vector<std::vector<T>>& rows_ineq,
          const std::vector<T>& rhs_ineq,
          const std::vector<std::vector<T>>& rows_eq,
          const std::vector<T>& rhs_eq, std::vector<T> objective, T tol,
          long max_pivots)
      : tol_(tol), max_pivots_(max_pivots), n_(num_vars),
        num_slack_(static_cast<int>(rows_ineq.size())),
        m_(static_cast<int>(rows_ineq.size() + rows_eq.size())),
        obj_(std::move(objective)) {
    row_sign_.assign(m_, 1);
    std::vector<int> needs_artificial;
    for (int r = 0; r < m_; ++r) {
      bool is_ineq = r < num_slack_;
      const auto& src = is_ineq ? rows_ineq[r] : rows_eq[r - num_slack_];
      T rhs = is_ineq ? rhs_ineq[r] : rhs_eq[r - num_slack_];
      if (rhs < T(0)) row_sign_[r] = -1;
      if (!is_ineq || rhs < T(0)) needs_artificial.push_back(r);
      (void)src;
    }
    num_art_ = static_cast<int>(needs_artificial.size());
    cols_ = n_ + num_slack_ + num_art_;
    a_.assign(m_, std::vector<T>(cols_, T(0)));
    b_.assign(m_, T(0));
    basis_.assign(m_, -1);
    dead_.assign(cols_, false);

    for (int r = 0; r < m_; ++r) {
      bool is_ineq = r < num_slack_;
      const auto& src = is_ineq ? rows_ineq[r] : rows_eq[r - num_slack_];
      T rhs = is_ineq ? rhs_ineq[r] : rhs_eq[r - num_slack_];
      T sign = T(row_sign_[r]);
      for (int j = 0; j < n_; ++j) a_[r][j] = sign * src[j];
      if (is_ineq) a_[r][n_ + r] = sign;
      b_[r] = sign * rhs;
    }
    int art = 0;
    for (int r : needs_artificial) {
      int col = n_ + num_slack_ + art++;
      a_[r][col] = T(1);
      basis_[r] = col;
      artificial_row_[col] = r;
    }
    for (int r = 0; r < m_; ++r)
      if (basis_[r] < 0) basis_[r] = n_ + r;  // slack basis, coefficient +1
  }

  LpStatus run(std::vector<T>* x, T* value, std::vector<T>* duals) {
    if (num_art_ > 0) {
      std::vector<T> phase1(cols_, T(0));
      for (const auto& [col, row] : artificial_row_) {
        phase1[col] = T(-1);
        (void)row;
      }
      LpStatus st = optimize(phase1);
      if (st == LpStatus::IterationLimit) return st;
      T art_sum(0);
      for (int r = 0; r < m_; ++r)
        if (is_artificial(basis_[r])) art_sum += b_[r];
      if (art_sum > infeasibility_tol()) return LpStatus::Infeasible;
      purge_artificials();
    }
    for (int j = n_ + num_slack_; j < cols_; ++j) dead_[j] = true;

    std::vector<T> full(cols_, T(0));
    for (int j = 0; j < n_; ++j) full[j] = obj_[j];
    LpStatus st = optimize(full);
    if (st != LpStatus::Optimal) return st;

    x->assign(n_, T(0));
    for (int r = 0; r < m_; ++r)
      if (basis_[r] < n_) (*x)[basis_[r]] = b_[r];
    *value = T(0);
    for (int j = 0; j < n_; ++j) *value += obj_[j] * (*x)[j];

    // Duals y solve y^T A_B = c_B; read them from the reduced costs of the
    // slack columns (y_r = -rc_slack_r for +1 slacks) and, for rows without
    // slacks, from the artificial columns, undoing the row sign flips.
    duals->assign(m_, T(0));
    std::vector<T> rc = reduced_costs(full);
    for (int r = 0; r < num_slack_; ++r)
      (*duals)[r] = -rc[n_ + r] * T(row_sign_[r]);
    for (const auto& [col, row] : artificial_row_)
      if (row >= num_slack_) (*duals)[row] = -rc[col] * T(row_sign_[row]);
    return LpStatus::Optimal;
  }

  long pivots() const { return pivot_count_; }

 private:
  bool is_artificial(int j) const { return j >= n_ + num_slack_; }

  T infeasibility_tol() const {
    if constexpr (std::is_same_v<T, double>) return 1e-7;
    else return T(0);
  }

  std::vector<T> reduced_costs(const std::vector<T>& c) const {
    std::vector<T> rc(cols_);
    std::vector<T> cb(m_);
    bool any = false;
    for (int r = 0; r < m_; ++r) {
      cb[r] = c[basis_[r]];
      if (cb[r] != T(0)) any = true;
    }
    for (int j = 0; j < cols_; ++j) {
      T v = c[j];
      if (any)
        for (int r = 0; r < m_; ++r)
          if (cb[r] != T(0)) v -= cb[r] * a_[r][j];
      rc[j] = v;
    }
    return rc;
  }

  // True if scaled row r beats scaled row best lexicographically over
  // (b, tableau row).
  bool lex_less(int r, int best, int enter) const {
    const T& ar = a_[r][enter];
    const T& ab = a_[best][enter];
    T lhs = b_[r] * ab;
    T rhs = b_[best] * ar;
    if (lhs != rhs) return lhs < rhs;
    for (int j = 0; j < cols_; ++j) {
      lhs = a_[r][j] * ab;
      rhs = a_[best][j] * ar;
      if (lhs != rhs) return lhs < rhs;
    }
    return false;
  }

  LpStatus optimize(const std::vector<T>& c) {
    const bool debug = std::getenv("BINV_LP_DEBUG") != nullptr;
    std::vector<bool> in_basis(cols_, false);
    for (int r = 0; r < m_; ++r) in_basis[basis_[r]] = true;
    for (;;) {
      if (pivot_count_ > max_pivots_) return LpStatus::IterationLimit;
      std::vector<T> rc = reduced_costs(c);
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (in_basis[j] || dead_[j]) continue;
        if (rc[j] > tol_ && (enter < 0 || rc[j] > rc[enter])) enter = j;
      }
      if (enter < 0) {
        if (debug) {
          T obj(0);
          for (int r = 0; r < m_; ++r) obj += c[basis_[r]] * b_[r];
          std::fprintf(stderr,
                       "[lp] stop: obj=%.9f n=%d slack=%d art=%d\n",
                       to_double(obj), n_, num_slack_, num_art_);
          for (int j = 0; j < cols_; ++j) {
            if (in_basis[j]) continue;
            if (rc[j] > tol_ || dead_[j])
              std::fprintf(stderr, "  col %d: rc=%.4e dead=%d\n", j,
                           to_double(rc[j]), (int)dead_[j]);
          }
          std::fprintf(stderr, "  basis:");
          for (int r = 0; r < m_; ++r)
            std::fprintf(stderr, " %d(b=%.3f)", basis_[r], to_double(b_[r]));
          std::fprintf(stderr, "\n");
        }
        return LpStatus::Optimal;
      }
      int leave = -1;
      for (int r = 0; r < m_; ++r) {
        if (a_[r][enter] <= tol_) continue;
        if (leave < 0 || lex_less(r, leave, enter)) leave = r;
      }
      if (leave < 0) return LpStatus::Unbounded;
      if (debug)
        std::fprintf(stderr, "[lp] pivot %ld: enter=%d leave_row=%d (var %d) b=%.6f\n",
                     pivot_count_, enter, leave, basis_[leave],
                     to_double(b_[leave]));
      in_basis[basis_[leave]] = false;
      if (is_artificial(basis_[leave]) && !std::getenv("BINV_LP_KEEP_ART"))
        dead_[basis_[leave]] = true;
      in_basis[enter] = true;
      pivot(leave, enter);
      if (debug) {
        for (int r = 0; r < m_; ++r)
          if (b_[r] < T(0))
            std::fprintf(stderr,
                         "[lp] NEGATIVE b after pivot %ld: row %d b=%.6e\n",
                         pivot_count_, r, to_double(b_[r]));
      }
    }
  }

  void pivot(int row, int col) {
    ++pivot_count_;
    T inv = T(1) / a_[row][col];
    for (int j = 0; j < cols_; ++j) a_[row][j] *= inv;
    b_[row] *= inv;
    a_[row][col] = T(1);
    for (int r = 0; r < m_; ++r) {
      if (r == row) continue;
      T f = a_[r][col];
      if (f == T(0)) continue;
      for (int j = 0; j < cols_; ++j) a_[r][j] -= f * a_[row][j];
      b_[r] -= f * b_[row];
      a_[r][col] = T(0);
    }
    basis_[row] = col;
    if constexpr (std::is_same_v<T, double>) {
      for (int r = 0; r < m_; ++r) {
        for (int j = 0; j < cols_; ++j)
          if (std::abs(a_[r][j]) < kDropTol) a_[r][j] = 0.0;
        if (std::abs(b_[r]) < kDropTol) b_[r] = 0.0;
      }
    }
  }

  // Pivot zero-valued artificials out of the basis where possible. Rows left
  // with a basic artificial are redundant; they stay put and their artificial
  // is barred from moving, so they never influence later pivots.
  void purge_artificials() {
    for (int r = 0; r < m_; ++r) {
      if (!is_artificial(basis_[r])) continue;
      int col = -1;
      for (int j = 0; j < n_ + num_slack_; ++j) {
        if (abs_val(a_[r][j]) > tol_) {
          bool basic = false;
          for (int rr = 0; rr < m_; ++rr) basic |= basis_[rr] == j;
          if (!basic) { col = j; break; }
        }
      }
      if (col >= 0) {
        dead_[basis_[r]] = true;
        pivot(r, col);
      }
    }
  }

  static constexpr double kDropTol = 1e-11;

  T tol_;
  long max_pivots_;
  long pivot_count_ = 0;
  int n_ = 0, num_slack_ = 0, m_ = 0, num_art_ = 0, cols_ = 0;
  std::vector<std::vector<T>> a_;
  std::vector<T> b_;
  std::vector<T> obj_;
  std::vector<int> basis_;
  std::vector<int> row_sign_;
  std::vector<bool> dead_;
  std::map<int, int> artificial_row_;
};

// max_den <= 0 requests the exact binary value of every coefficient.
template <class T>
LpSolution solve_impl(const LinearProgram& lp, T tol, long max_pivots,
                      long max_den) {
  const int n = lp.num_vars;
  if (static_cast<int>(lp.objective.size()) != n)
    throw std::invalid_argument("LP objective width mismatch");
  auto convert_scalar = [&](double v) {
    if constexpr (std::is_same_v<T, double>) return T(v);
    else return max_den > 0 ? rationalize(v, max_den) : exact_rational(v);
  };
  auto convert_row = [&](const std::vector<double>& src) {
    std::vector<T> row(n, T(0));
    for (int j = 0; j < n; ++j) row[j] = convert_scalar(src[j]);
    return row;
  };

  std::vector<std::vector<T>> rows_ineq, rows_eq;
  std::vector<T> rhs_ineq, rhs_eq, objective(n, T(0));
  for (const auto& r : lp.ineq_rows) rows_ineq.push_back(convert_row(r));
  for (double v : lp.ineq_rhs) rhs_ineq.push_back(convert_scalar(v));
  for (const auto& r : lp.eq_rows) rows_eq.push_back(convert_row(r));
  for (double v : lp.eq_rhs) rhs_eq.push_back(convert_scalar(v));
  for (int j = 0; j < n; ++j) objective[j] = convert_scalar(lp.objective[j]);

  Tableau<T> tab(n, rows_ineq, rhs_ineq, rows_eq, rhs_eq, objective, tol,
                 max_pivots);

  LpSolution out;
  std::vector<T> x, duals;
  T value(0);
  LpStatus st = tab.run(&x, &value, &duals);
  out.status = st;
  out.pivots = tab.pivots();
  if (st != LpStatus::Optimal) return out;

  out.value = to_double(value);
  out.x.resize(n);
  for (int j = 0; j < n; ++j) out.x[j] = to_double(x[j]);
  const int mi = static_cast<int>(lp.ineq_rows.size());
  out.dual_ineq.resize(mi);
  out.dual_eq.resize(lp.eq_rows.size());
  for (int r = 0; r < mi; ++r) out.dual_ineq[r] = to_double(duals[r]);
  for (size_t k = 0; k < lp.eq_rows.size(); ++k)
    out.dual_eq[k] = to_double(duals[mi + k]);
  if constexpr (!std::is_same_v<T, double>) {
    std::ostringstream os;
    os << value;
    out.exact_value = os.str();
  }

  // Certificates: primal feasibility, dual feasibility, complementarity.
  double pres = 0.0;
  for (int r = 0; r < mi; ++r) {
    double ax = 0.0;
    for (int j = 0; j < n; ++j) ax += lp.ineq_rows[r][j] * out.x[j];
    pres = std::max(pres, ax - lp.ineq_rhs[r]);
    out.complementary_slackness =
        std::max(out.complementary_slackness,
                 std::abs(out.dual_ineq[r] * (lp.ineq_rhs[r] - ax)));
  }
  for (size_t k = 0; k < lp.eq_rows.size(); ++k) {
    double ax = 0.0;
    for (int j = 0; j < n; ++j) ax += lp.eq_rows[k][j] * out.x[j];
    pres = std::max(pres, std::abs(ax - lp.eq_rhs[k]));
  }
  for (int j = 0; j < n; ++j) pres = std::max(pres, -out.x[j]);
  out.primal_residual = pres;

  double dres = 0.0;
  for (int r = 0; r < mi; ++r) dres = std::max(dres, -out.dual_ineq[r]);
  for (int j = 0; j < n; ++j) {
    double red = lp.objective[j];
    for (int r = 0; r < mi; ++r) red -= out.dual_ineq[r] * lp.ineq_rows[r][j];
    for (size_t k = 0; k < lp.eq_rows.size(); ++k)
      red -= out.dual_eq[k] * lp.eq_rows[k][j];
    dres = std::max(dres, red);  // dual feasibility wants c_j - y.A_j <= 0
    out.complementary_slackness =
        std::max(out.complementary_slackness, std::abs(out.x[j] * red));
  }
  out.dual_residual = dres;
  return out;
}

}  // namespace

void LinearProgram::add_ineq(std::vector<double> row, double rhs,
                             std::string name) {
  if (static_cast<int>(row.size()) != num_vars)
    throw std::invalid_argument("LP row width mismatch");
  ineq_rows.push_back(std::move(row));
  ineq_rhs.push_back(rhs);
  row_names.push_back(std::move(name));
}

void LinearProgram::add_eq(std::vector<double> row, double rhs,
                           std::string name) {
  if (static_cast<int>(row.size()) != num_vars)
    throw std::invalid_argument("LP row width mismatch");
  eq_rows.push_back(std::move(row));
  eq_rhs.push_back(rhs);
  row_names.push_back(std::move(name));
}

LpSolution solve(const LinearProgram& lp, double tol, long max_pivots) {
  LpSolution fast = solve_impl<double>(lp, tol, max_pivots, 0);
  bool trustworthy = fast.status == LpStatus::Optimal &&
                     fast.primal_residual <= 1e-8 &&
                     fast.dual_residual <= 1e-8;
  if (trustworthy) return fast;
  // The dense double tableau occasionally drifts on degenerate instances;
  // redo the solve over exact rationals on the bitwise-identical data.
  LpSolution exact = solve_impl<Rational>(lp, Rational(0), max_pivots, 0);
  exact.used_exact_fallback = true;
  exact.exact_value.clear();  // data were binary doubles, not chosen fractions
  return exact;
}

std::pair<bool, std::vector<double>> feasibility(const LinearProgram& lp,
                                                 double tol, long max_pivots) {
  LinearProgram probe = lp;
  probe.objective.assign(lp.num_vars, 0.0);
  LpSolution s = solve(probe, tol, max_pivots);
  return {s.status == LpStatus::Optimal, s.x};
}

LpSolution solve_exact(const LinearProgram& lp, long max_denominator,
                       long max_pivots) {
  return solve_impl<Rational>(lp, Rational(0), max_pivots, max_denominator);
}

std::string dump_lp(const LinearProgram& lp) {
  auto var = [&](int j) {
    return lp.var_names.size() == static_cast<size_t>(lp.num_vars)
               ? lp.var_names[j]
               : "x" + std::to_string(j);
  };
  auto write_row = [&](std::ostringstream& os, const std::vector<double>& row) {
    bool first = true;
    for (int j = 0; j < lp.num_vars; ++j) {
      if (row[j] == 0.0) continue;
      if (first) {
        os << (row[j] < 0 ? "- " : "");
      } else {
        os << (row[j] < 0 ? " - " : " + ");
      }
      os << std::abs(row[j]) << " " << var(j);
      first = false;
    }
    if (first) os << "0 " << var(0);
  };
  std::ostringstream os;
  os << "\\ generated by binv\nMaximize\n obj: ";
  write_row(os, lp.objective);
  os << "\nSubject To\n";
  int row_id = 0;
  for (size_t r = 0; r < lp.ineq_rows.size(); ++r, ++row_id) {
    os << " c" << row_id << ": ";
    write_row(os, lp.ineq_rows[r]);
    os << " <= " << lp.ineq_rhs[r] << "\n";
  }
  for (size_t k = 0; k < lp.eq_rows.size(); ++k, ++row_id) {
    os << " c" << row_id << ": ";
    write_row(os, lp.eq_rows[k]);
    os << " = " << lp.eq_rhs[k] << "\n";
  }
  os << "Bounds\n";
  for (int j = 0; j < lp.num_vars; ++j) os << " 0 <= " << var(j) << "\n";
  os << "End\n";
  return os.str();
}

}  // namespace binv
