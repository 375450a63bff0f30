#pragma once
#ifdef EDCS_SIMPLEX_DEBUG
#include <iostream>
#endif

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "edcs/errors.hpp"
#include "edcs/lp.hpp"
#include "edcs/rational.hpp"

namespace edcs {

enum class SolveStatus { Optimal, Infeasible, Unbounded };

template <class T>
struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  T objective{};
  std::vector<T> solution;  // structural variables, present iff Optimal
  std::vector<int> basis;   // basic indices; >= num_vars marks a redundant row
  long pivots = 0;
  bool degraded = false;    // float mode: a pivot below tolerance was forced
};

template <class T>
inline T from_rational(const Rational& q);
template <>
inline double from_rational<double>(const Rational& q) { return q.get_d(); }
template <>
inline Rational from_rational<Rational>(const Rational& q) { return q; }

namespace detail {

template <class T>
inline T abs_val(const T& x) { return x < T(0) ? T(-x) : x; }

// Two-phase revised simplex over an equality-form LP with x >= 0,
// maximizing. The basis inverse is kept explicitly and updated by row
// operations; phase 1 uses one artificial per row with sign-adjusted rhs.
// Exact mode pivots by Bland's rule throughout. Float mode uses Dantzig's
// rule with a pivot tolerance and falls back to Bland's on a stall.
template <class T>
class RevisedSimplex {
 public:
  RevisedSimplex(const LinearProgram& lp, bool exact)
      : exact_(exact),
        m_(static_cast<int>(lp.eq_rows.size())),
        n_(lp.num_vars) {
    cols_.resize(static_cast<size_t>(n_));
    rhs_.resize(static_cast<size_t>(m_));
    obj_.assign(static_cast<size_t>(n_), T(0));
    for (const auto& [j, c] : lp.objective)
      obj_[static_cast<size_t>(j)] = from_rational<T>(c);
    for (int i = 0; i < m_; ++i) {
      const auto& [row, rhs] = lp.eq_rows[static_cast<size_t>(i)];
      bool flip = rhs < 0;
      rhs_[static_cast<size_t>(i)] =
          from_rational<T>(flip ? Rational(-rhs) : rhs);
      for (const auto& [j, c] : row)
        cols_[static_cast<size_t>(j)].emplace_back(
            i, from_rational<T>(flip ? Rational(-c) : c));
    }
    if (!exact_) {
      pivot_tol_ = T(1e-9);
      cost_tol_ = T(1e-7);
      feas_tol_ = T(1e-4);
      // Break primal degeneracy: tiny deterministic rhs perturbation,
      // undone by a fresh solve against the true rhs at the end.
      rhs_true_ = rhs_;
      unsigned s = 0x9e3779b9u;
      for (int i = 0; i < m_; ++i) {
        s = s * 1664525u + 1013904223u;
        double r = static_cast<double>(s >> 8) /
                   static_cast<double>(1u << 24);
        rhs_[static_cast<size_t>(i)] += T(1e-7 * (0.5 + r));
      }
    }
    max_pivots_ = 1000L * (m_ + n_);
  }

  SolveResult<T> solve() {
    SolveResult<T> res;
    basis_.resize(static_cast<size_t>(m_));
    in_basis_.assign(static_cast<size_t>(n_), false);
    binv_.assign(static_cast<size_t>(m_),
                 std::vector<T>(static_cast<size_t>(m_), T(0)));
    for (int i = 0; i < m_; ++i) {
      basis_[static_cast<size_t>(i)] = n_ + i;
      binv_[static_cast<size_t>(i)][static_cast<size_t>(i)] = T(1);
    }
    xb_ = rhs_;

    // Phase 1: drive the artificials to zero.
    std::vector<T> phase1_cost(static_cast<size_t>(n_), T(0));
    if (!run_phase(phase1_cost, /*phase1=*/true, res))
      return res;  // hit unbounded, impossible in phase 1 but handled
    T art_sum(0);
    for (int i = 0; i < m_; ++i)
      if (basis_[static_cast<size_t>(i)] >= n_)
        art_sum += xb_[static_cast<size_t>(i)];
#ifdef EDCS_SIMPLEX_DEBUG
    std::cerr << "phase1 done pivots=" << pivots_ << " art_sum=" << art_sum
              << std::endl;
#endif
    if (art_sum > feas_tol_) {
      res.status = SolveStatus::Infeasible;
      return res;
    }
    drive_out_artificials(res);
    if (!exact_) refactorize();  // enter phase 2 with a clean inverse

    if (!run_phase(obj_, /*phase1=*/false, res)) return res;

    if (!exact_) restore_true_rhs(res);

    res.status = SolveStatus::Optimal;
    res.solution.assign(static_cast<size_t>(n_), T(0));
    for (int i = 0; i < m_; ++i)
      if (basis_[static_cast<size_t>(i)] < n_)
        res.solution[static_cast<size_t>(basis_[static_cast<size_t>(i)])] =
            xb_[static_cast<size_t>(i)];
    res.objective = T(0);
    for (int j = 0; j < n_; ++j)
      if (!(obj_[static_cast<size_t>(j)] == T(0)))
        res.objective +=
            obj_[static_cast<size_t>(j)] * res.solution[static_cast<size_t>(j)];
    res.basis = basis_;
    res.pivots = pivots_;
    return res;
  }

 private:
  // Reduced cost of structural column j given the dual vector y.
  T reduced_cost(const std::vector<T>& cost, const std::vector<T>& y,
                 int j) const {
    T d = cost[static_cast<size_t>(j)];
    for (const auto& [i, a] : cols_[static_cast<size_t>(j)])
      d -= y[static_cast<size_t>(i)] * a;
    return d;
  }

  // y = c_B^T B^{-1}; artificials in phase 1 carry cost -1, otherwise 0.
  std::vector<T> duals(const std::vector<T>& cost, bool phase1) const {
    std::vector<T> y(static_cast<size_t>(m_), T(0));
    for (int i = 0; i < m_; ++i) {
      int b = basis_[static_cast<size_t>(i)];
      T cb = b < n_ ? cost[static_cast<size_t>(b)]
                    : (phase1 ? T(-1) : T(0));
      if (cb == T(0)) continue;
      const auto& row = binv_[static_cast<size_t>(i)];
      for (int k = 0; k < m_; ++k)
        if (!(row[static_cast<size_t>(k)] == T(0)))
          y[static_cast<size_t>(k)] += cb * row[static_cast<size_t>(k)];
    }
    return y;
  }

  std::vector<T> ftran(int j) const {
    std::vector<T> u(static_cast<size_t>(m_), T(0));
    for (const auto& [i, a] : cols_[static_cast<size_t>(j)]) {
      if (a == T(0)) continue;
      for (int r = 0; r < m_; ++r) {
        const T& b = binv_[static_cast<size_t>(r)][static_cast<size_t>(i)];
        if (!(b == T(0))) u[static_cast<size_t>(r)] += b * a;
      }
    }
    return u;
  }

  // Returns false iff the phase detected an unbounded ray (sets res).
  bool run_phase(const std::vector<T>& cost, bool phase1,
                 SolveResult<T>& res) {
    // Float mode: columns whose basis representation is numerically
    // dependent (no usable pivot element) are banned until the next
    // successful pivot changes the basis.
    std::vector<char> banned(static_cast<size_t>(n_), 0);
    std::vector<int> banned_list;
    while (true) {
      if (pivots_ > max_pivots_)
        throw OperationalError("simplex: iteration cap exceeded (" +
                               std::to_string(max_pivots_) + " pivots)");
      std::vector<T> y = duals(cost, phase1);
      int enter = -1;
      T best_d(0);
      for (int j = 0; j < n_; ++j) {
        if (in_basis_[static_cast<size_t>(j)] ||
            banned[static_cast<size_t>(j)])
          continue;
        T d = reduced_cost(cost, y, j);
        if (d > cost_tol_ && (enter < 0 || d > best_d)) {
          enter = j;
          best_d = d;
        }
      }
      if (enter < 0) return true;
#ifdef EDCS_SIMPLEX_DEBUG
      if (pivots_ % 2000 == 0)
        std::cerr << "  pivots=" << pivots_ << " phase1=" << phase1
                  << " obj=" << phase_objective(cost, phase1)
                  << " best_d=" << best_d << std::endl;
#endif

      std::vector<T> u = ftran(enter);
      int leave = -1;
      if (exact_) {
        T best_ratio(0);
        for (int i = 0; i < m_; ++i) {
          const T& ui = u[static_cast<size_t>(i)];
          if (!(ui > pivot_tol_)) continue;
          T num = xb_[static_cast<size_t>(i)];
          if (num < T(0)) num = T(0);
          T ratio = num / ui;
          if (leave < 0 || ratio < best_ratio) {
            leave = i;
            best_ratio = ratio;
          } else if (ratio == best_ratio) {
            // Lexicographic tie-break: smallest B^{-1} row scaled by the
            // pivot element. Guarantees termination in exact arithmetic.
            if (lex_less(i, leave, u)) leave = i;
          }
        }
      } else {
        // Two-pass Harris ratio test: bound the step by the ratios relaxed
        // with the feasibility tolerance, then among rows whose true ratio
        // fits under that bound take the largest pivot element. Keeps the
        // product-form inverse well conditioned.
        const T delta(1e-7);
        T theta(-1);
        for (int i = 0; i < m_; ++i) {
          const T& ui = u[static_cast<size_t>(i)];
          if (!(ui > pivot_tol_)) continue;
          T num = xb_[static_cast<size_t>(i)];
          if (num < T(0)) num = T(0);
          T ratio = (num + delta) / ui;
          if (theta < T(0) || ratio < theta) theta = ratio;
        }
        if (!(theta < T(0))) {
          for (int i = 0; i < m_; ++i) {
            const T& ui = u[static_cast<size_t>(i)];
            if (!(ui > pivot_tol_)) continue;
            T num = xb_[static_cast<size_t>(i)];
            if (num < T(0)) num = T(0);
            if (num / ui > theta) continue;
            if (leave < 0 || ui > u[static_cast<size_t>(leave)]) leave = i;
          }
        }
        // The whole column may be noise: the entering variable is already
        // in the span of the basis, and pivoting on it would make the
        // basis singular. Set it aside and price again.
        T stab(1e-7);
        bool dependent = leave >= 0 && u[static_cast<size_t>(leave)] < stab;
        if (leave < 0) {
          T mx(0);
          for (const T& v : u)
            if (abs_val(v) > mx) mx = abs_val(v);
          dependent = mx < stab;
        }
        if (dependent) {
          banned[static_cast<size_t>(enter)] = 1;
          banned_list.push_back(enter);
          continue;
        }
      }
      if (leave < 0) {
#ifdef EDCS_SIMPLEX_DEBUG
        {
          T mx(-1);
          for (int i = 0; i < m_; ++i)
            if (u[static_cast<size_t>(i)] > mx) mx = u[static_cast<size_t>(i)];
          std::cerr << "no-leave: phase1=" << phase1 << " enter=" << enter
                    << " best_d=" << best_d << " max_u=" << mx
                    << " cost_tol=" << cost_tol_
                    << " recoveries=" << recoveries_
                    << " pivots=" << pivots_ << std::endl;
        }
#endif
        if (!exact_) {
          // An apparent unbounded ray on a noise-level reduced cost is a
          // converged solve, not a real ray.
          if (best_d < T(1e-6)) return true;
          // Otherwise suspect accumulated product-form roundoff: rebuild
          // the inverse and re-price with a loosened cost tolerance.
          if (recoveries_ < 8) {
            ++recoveries_;
            refactorize();
            since_refactor_ = 0;
            if (cost_tol_ < T(1e-5)) cost_tol_ *= T(10);
            continue;
          }
        }
        res.status = SolveStatus::Unbounded;
        res.pivots = pivots_;
        return false;
      }
      if (!exact_ && abs_val(u[static_cast<size_t>(leave)]) < pivot_tol_ * 2)
        res.degraded = true;
      pivot(leave, enter, u);
      if (!banned_list.empty()) {
        for (int j : banned_list) banned[static_cast<size_t>(j)] = 0;
        banned_list.clear();
      }
      // Float mode: cheap residual check on a fixed cadence; rebuild the
      // inverse only when product-form roundoff has actually accumulated.
      if (!exact_ && ++since_refactor_ >= refactor_interval_) {
        since_refactor_ = 0;
        T resid = basis_residual();
        if (resid > T(1e-8)) {
#ifdef EDCS_SIMPLEX_DEBUG
          std::cerr << "  refactor at pivots=" << pivots_
                    << " resid=" << resid << std::endl;
#endif
          refactorize();
#ifdef EDCS_SIMPLEX_DEBUG
          std::cerr << "  post-refactor resid=" << basis_residual()
                    << std::endl;
#endif
        }
      }
    }
  }

  // max_i |(B x_B - rhs)_i| from the sparse basis columns; O(nnz(B)).
  T basis_residual() const {
    std::vector<T> r(rhs_);
    for (int i = 0; i < m_; ++i) {
      int b = basis_[static_cast<size_t>(i)];
      const T& xi = xb_[static_cast<size_t>(i)];
      if (xi == T(0)) continue;
      if (b < n_) {
        for (const auto& [row, a] : cols_[static_cast<size_t>(b)])
          r[static_cast<size_t>(row)] -= a * xi;
      } else {
        r[static_cast<size_t>(b - n_)] -= xi;
      }
    }
    T mx(0);
    for (const T& v : r)
      if (abs_val(v) > mx) mx = abs_val(v);
    return mx;
  }

  // Float mode only: re-solve B x_B = b_true by fresh LU with partial
  // pivoting, discarding both the perturbation and any accumulated
  // product-form roundoff.
  void restore_true_rhs(SolveResult<T>& res) {
    std::vector<std::vector<T>> a(
        static_cast<size_t>(m_),
        std::vector<T>(static_cast<size_t>(m_ + 1), T(0)));
    for (int i = 0; i < m_; ++i) {
      int b = basis_[static_cast<size_t>(i)];
      if (b < n_) {
        for (const auto& [r, v] : cols_[static_cast<size_t>(b)])
          a[static_cast<size_t>(r)][static_cast<size_t>(i)] = v;
      } else {
        a[static_cast<size_t>(b - n_)][static_cast<size_t>(i)] = T(1);
      }
      a[static_cast<size_t>(i)][static_cast<size_t>(m_)] =
          rhs_true_[static_cast<size_t>(i)];
    }
    for (int c = 0; c < m_; ++c) {
      int p = c;
      for (int r = c + 1; r < m_; ++r)
        if (abs_val(a[static_cast<size_t>(r)][static_cast<size_t>(c)]) >
            abs_val(a[static_cast<size_t>(p)][static_cast<size_t>(c)]))
          p = r;
      if (a[static_cast<size_t>(p)][static_cast<size_t>(c)] == T(0)) {
        res.degraded = true;  // numerically singular basis; keep current xb
        return;
      }
      std::swap(a[static_cast<size_t>(c)], a[static_cast<size_t>(p)]);
      for (int r = c + 1; r < m_; ++r) {
        T f = a[static_cast<size_t>(r)][static_cast<size_t>(c)] /
              a[static_cast<size_t>(c)][static_cast<size_t>(c)];
        if (f == T(0)) continue;
        for (int k = c + 1; k <= m_; ++k)
          a[static_cast<size_t>(r)][static_cast<size_t>(k)] -=
              f * a[static_cast<size_t>(c)][static_cast<size_t>(k)];
      }
    }
    for (int i = m_ - 1; i >= 0; --i) {
      T v = a[static_cast<size_t>(i)][static_cast<size_t>(m_)];
      for (int k = i + 1; k < m_; ++k)
        v -= a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
             xb_[static_cast<size_t>(k)];
      xb_[static_cast<size_t>(i)] = v / a[static_cast<size_t>(i)][static_cast<size_t>(i)];
    }
  }

  // True iff row a, scaled by its pivot entry, is lexicographically
  // smaller than row b scaled by its pivot entry.
  bool lex_less(int a, int b, const std::vector<T>& u) const {
    const T& ua = u[static_cast<size_t>(a)];
    const T& ub = u[static_cast<size_t>(b)];
    const auto& ra = binv_[static_cast<size_t>(a)];
    const auto& rb = binv_[static_cast<size_t>(b)];
    for (int k = 0; k < m_; ++k) {
      T va = ra[static_cast<size_t>(k)] / ua;
      T vb = rb[static_cast<size_t>(k)] / ub;
      if (va < vb) return true;
      if (vb < va) return false;
    }
    return false;
  }

  T phase_objective(const std::vector<T>& cost, bool phase1) const {
    T v(0);
    for (int i = 0; i < m_; ++i) {
      int b = basis_[static_cast<size_t>(i)];
      T cb = b < n_ ? cost[static_cast<size_t>(b)]
                    : (phase1 ? T(-1) : T(0));
      if (!(cb == T(0))) v += cb * xb_[static_cast<size_t>(i)];
    }
    return v;
  }

  void pivot(int leave, int enter, const std::vector<T>& u) {
    int old = basis_[static_cast<size_t>(leave)];
    if (old < n_) in_basis_[static_cast<size_t>(old)] = false;
    basis_[static_cast<size_t>(leave)] = enter;
    in_basis_[static_cast<size_t>(enter)] = true;

    const T piv = u[static_cast<size_t>(leave)];
    auto& prow = binv_[static_cast<size_t>(leave)];
    for (int k = 0; k < m_; ++k) prow[static_cast<size_t>(k)] /= piv;
    xb_[static_cast<size_t>(leave)] /= piv;
    for (int i = 0; i < m_; ++i) {
      if (i == leave) continue;
      const T& f = u[static_cast<size_t>(i)];
      if (f == T(0)) continue;
      auto& row = binv_[static_cast<size_t>(i)];
      for (int k = 0; k < m_; ++k) {
        if (!(prow[static_cast<size_t>(k)] == T(0)))
          row[static_cast<size_t>(k)] -= f * prow[static_cast<size_t>(k)];
      }
      xb_[static_cast<size_t>(i)] -= f * xb_[static_cast<size_t>(leave)];
    }
    ++pivots_;
  }

  // Replace basic artificials by structural columns where possible. Rows
  // whose artificial cannot be displaced are dependent; their artificial
  // stays basic at zero and never re-enters the arithmetic.
  void drive_out_artificials(SolveResult<T>& res) {
    int remaining = 0;
    for (int i = 0; i < m_; ++i)
      if (basis_[static_cast<size_t>(i)] >= n_) ++remaining;
    for (int j = 0; j < n_ && remaining > 0; ++j) {
      if (in_basis_[static_cast<size_t>(j)]) continue;
      std::vector<T> u = ftran(j);
      for (int i = 0; i < m_; ++i) {
        if (basis_[static_cast<size_t>(i)] < n_) continue;
        if (abs_val(u[static_cast<size_t>(i)]) > pivot_tol_ &&
            !(u[static_cast<size_t>(i)] == T(0))) {
          pivot(i, j, u);
          --remaining;
          break;
        }
      }
    }
    (void)res;
  }

  void refactorize() {
    // Fresh Gauss-Jordan inverse of the current basis matrix.
    std::vector<std::vector<T>> a(
        static_cast<size_t>(m_),
        std::vector<T>(static_cast<size_t>(2 * m_), T(0)));
    for (int i = 0; i < m_; ++i) {
      int b = basis_[static_cast<size_t>(i)];
      if (b < n_) {
        for (const auto& [r, v] : cols_[static_cast<size_t>(b)])
          a[static_cast<size_t>(r)][static_cast<size_t>(i)] = v;
      } else {
        a[static_cast<size_t>(b - n_)][static_cast<size_t>(i)] = T(1);
      }
      a[static_cast<size_t>(i)][static_cast<size_t>(m_ + i)] = T(1);
    }
    for (int c = 0; c < m_; ++c) {
      int p = -1;
      for (int r = c; r < m_; ++r) {
        if (!(a[static_cast<size_t>(r)][static_cast<size_t>(c)] == T(0))) {
          if (p < 0 ||
              abs_val(a[static_cast<size_t>(r)][static_cast<size_t>(c)]) >
                  abs_val(a[static_cast<size_t>(p)][static_cast<size_t>(c)]))
            p = r;
          if (exact_) break;  // any nonzero pivot is exact
        }
      }
      if (p < 0) return;  // singular; keep the product-form inverse
      std::swap(a[static_cast<size_t>(c)], a[static_cast<size_t>(p)]);
      const T piv = a[static_cast<size_t>(c)][static_cast<size_t>(c)];
      for (int k = c; k < 2 * m_; ++k)
        a[static_cast<size_t>(c)][static_cast<size_t>(k)] /= piv;
      for (int r = 0; r < m_; ++r) {
        if (r == c) continue;
        const T f = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
        if (f == T(0)) continue;
        for (int k = c; k < 2 * m_; ++k)
          a[static_cast<size_t>(r)][static_cast<size_t>(k)] -=
              f * a[static_cast<size_t>(c)][static_cast<size_t>(k)];
      }
    }
    for (int i = 0; i < m_; ++i)
      for (int k = 0; k < m_; ++k)
        binv_[static_cast<size_t>(i)][static_cast<size_t>(k)] =
            a[static_cast<size_t>(i)][static_cast<size_t>(m_ + k)];
    for (int i = 0; i < m_; ++i) {
      T v(0);
      for (int k = 0; k < m_; ++k)
        if (!(binv_[static_cast<size_t>(i)][static_cast<size_t>(k)] == T(0)))
          v += binv_[static_cast<size_t>(i)][static_cast<size_t>(k)] *
               rhs_[static_cast<size_t>(k)];
      xb_[static_cast<size_t>(i)] = v;
    }
  }

  bool exact_;
  int m_, n_;
  std::vector<std::vector<std::pair<int, T>>> cols_;
  std::vector<T> rhs_, rhs_true_, obj_;
  std::vector<int> basis_;
  std::vector<bool> in_basis_;
  std::vector<std::vector<T>> binv_;
  std::vector<T> xb_;
  T pivot_tol_{0};
  T cost_tol_{0};
  T feas_tol_{0};
  long pivots_ = 0;
  long max_pivots_ = 0;
  long since_refactor_ = 0;
  long recoveries_ = 0;
  static constexpr int refactor_interval_ = 64;
};

}  // namespace detail

inline SolveResult<Rational> solve_exact(const LinearProgram& lp) {
  detail::RevisedSimplex<Rational> s(lp, /*exact=*/true);
  return s.solve();
}

inline SolveResult<double> solve_float(const LinearProgram& lp) {
  detail::RevisedSimplex<double> s(lp, /*exact=*/false);
  return s.solve();
}

// Independent optimality check for an exact solve: rebuilds the basis
// inverse from scratch, recomputes every reduced cost, and requires all of
// them nonpositive (maximization), plus exact feasibility of the solution.
inline bool verify_optimality(const LinearProgram& lp,
                              const SolveResult<Rational>& res) {
  if (res.status != SolveStatus::Optimal) return false;
  const int m = static_cast<int>(lp.eq_rows.size());
  const int n = lp.num_vars;
  if (static_cast<int>(res.basis.size()) != m) return false;

  Assignment x{res.solution};
  FeasibilityReport rep = check_assignment(lp, x);
  if (!rep.feasible() || rep.objective != res.objective) return false;

  // Sparse columns of the (sign-adjusted) constraint matrix.
  std::vector<bool> flip(static_cast<size_t>(m), false);
  for (int i = 0; i < m; ++i)
    flip[static_cast<size_t>(i)] = lp.eq_rows[static_cast<size_t>(i)].second < 0;
  std::vector<std::vector<std::pair<int, Rational>>> cols(
      static_cast<size_t>(n));
  for (int r = 0; r < m; ++r)
    for (const auto& [j, c] : lp.eq_rows[static_cast<size_t>(r)].first)
      cols[static_cast<size_t>(j)].emplace_back(
          r, flip[static_cast<size_t>(r)] ? Rational(-c) : c);

  // Dense basis matrix; artificial entries are unit columns.
  std::vector<std::vector<Rational>> a(
      static_cast<size_t>(m),
      std::vector<Rational>(static_cast<size_t>(m), Rational(0)));
  std::vector<Rational> cb(static_cast<size_t>(m), Rational(0));
  std::vector<Rational> obj(static_cast<size_t>(n), Rational(0));
  for (const auto& [j, c] : lp.objective) obj[static_cast<size_t>(j)] = c;
  for (int i = 0; i < m; ++i) {
    int b = res.basis[static_cast<size_t>(i)];
    if (b < n) {
      cb[static_cast<size_t>(i)] = obj[static_cast<size_t>(b)];
      for (const auto& [r, c] : cols[static_cast<size_t>(b)])
        a[static_cast<size_t>(r)][static_cast<size_t>(i)] = c;
    } else {
      a[static_cast<size_t>(b - n)][static_cast<size_t>(i)] = Rational(1);
    }
  }
  // Solve y^T B = c_B^T by Gaussian elimination on B^T y = c_B.
  std::vector<std::vector<Rational>> bt(
      static_cast<size_t>(m),
      std::vector<Rational>(static_cast<size_t>(m + 1), Rational(0)));
  for (int i = 0; i < m; ++i) {
    for (int r = 0; r < m; ++r)
      bt[static_cast<size_t>(i)][static_cast<size_t>(r)] =
          a[static_cast<size_t>(r)][static_cast<size_t>(i)];
    bt[static_cast<size_t>(i)][static_cast<size_t>(m)] =
        cb[static_cast<size_t>(i)];
  }
  for (int c = 0; c < m; ++c) {
    int p = -1;
    for (int r = c; r < m; ++r)
      if (bt[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
        p = r;
        break;
      }
    if (p < 0) return false;  // singular basis
    std::swap(bt[static_cast<size_t>(c)], bt[static_cast<size_t>(p)]);
    for (int r = 0; r < m; ++r) {
      if (r == c) continue;
      if (bt[static_cast<size_t>(r)][static_cast<size_t>(c)] == 0) continue;
      Rational f = bt[static_cast<size_t>(r)][static_cast<size_t>(c)] /
                   bt[static_cast<size_t>(c)][static_cast<size_t>(c)];
      for (int k = c; k <= m; ++k)
        bt[static_cast<size_t>(r)][static_cast<size_t>(k)] -=
            f * bt[static_cast<size_t>(c)][static_cast<size_t>(k)];
    }
  }
  std::vector<Rational> y(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    y[static_cast<size_t>(i)] = bt[static_cast<size_t>(i)][static_cast<size_t>(m)] /
                                bt[static_cast<size_t>(i)][static_cast<size_t>(i)];
  for (int j = 0; j < n; ++j) {
    Rational d = obj[static_cast<size_t>(j)];
    for (const auto& [r, c] : cols[static_cast<size_t>(j)])
      d -= y[static_cast<size_t>(r)] * c;
    if (d > 0) return false;
  }
  return true;
}

}  // namespace edcs
