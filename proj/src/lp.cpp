#include "hgdec/lp.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hgdec {

namespace {

constexpr double kEps = 1e-9;

struct Tableau {
  std::size_t rows, cols;            // constraint rows, structural columns
  std::vector<std::vector<double>> a;  // rows x (cols + 1), last is rhs
  std::vector<std::size_t> basis;      // basic column per row
  std::size_t art_begin;               // columns >= art_begin are artificial

  double& rhs(std::size_t r) { return a[r][cols]; }

  void pivot(std::size_t pr, std::size_t pc) {
    double piv = a[pr][pc];
    for (auto& v : a[pr]) v /= piv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr) continue;
      double f = a[r][pc];
      if (std::fabs(f) < kEps) continue;
      for (std::size_t c = 0; c <= cols; ++c) a[r][c] -= f * a[pr][c];
    }
    basis[pr] = pc;
  }

  // Minimizes cost.x with Bland's rule; artificial columns may be barred
  // from entering. Returns false on unboundedness.
  bool optimize(const std::vector<double>& cost, bool bar_artificials) {
    for (;;) {
      // Reduced costs via the basic cost row.
      std::vector<double> y(rows);
      for (std::size_t r = 0; r < rows; ++r) y[r] = cost[basis[r]];
      std::size_t enter = cols;
      for (std::size_t c = 0; c < cols; ++c) {
        if (bar_artificials && c >= art_begin) continue;
        double red = cost[c];
        for (std::size_t r = 0; r < rows; ++r) red -= y[r] * a[r][c];
        if (red < -kEps) {
          enter = c;
          break;  // Bland: first eligible column
        }
      }
      if (enter == cols) return true;
      std::size_t leave = rows;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < rows; ++r) {
        if (a[r][enter] > kEps) {
          double ratio = rhs(r) / a[r][enter];
          if (ratio < best - kEps ||
              (ratio < best + kEps &&
               (leave == rows || basis[r] < basis[leave]))) {
            best = ratio;
            leave = r;
          }
        }
      }
      if (leave == rows) return false;  // unbounded
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpSolution lp_solve(const LinearProgram& lp) {
  std::size_t n = lp.objective.size();
  // Upper bounds become explicit rows.
  std::vector<LpRow> rows = lp.rows;
  for (std::size_t j = 0; j < n && j < lp.upper.size(); ++j) {
    if (lp.upper[j] < 0) continue;
    LpRow r;
    r.coeffs.assign(n, 0.0);
    r.coeffs[j] = 1.0;
    r.sense = '<';
    r.rhs = lp.upper[j];
    rows.push_back(std::move(r));
  }
  // Normalize to rhs >= 0.
  for (auto& r : rows) {
    if (r.rhs < 0) {
      for (auto& c : r.coeffs) c = -c;
      r.rhs = -r.rhs;
      if (r.sense == '<')
        r.sense = '>';
      else if (r.sense == '>')
        r.sense = '<';
    }
  }

  std::size_t m = rows.size();
  std::size_t n_slack = 0, n_art = 0;
  for (const auto& r : rows) {
    if (r.sense != '=') ++n_slack;
    if (r.sense != '<') ++n_art;
  }
  Tableau t;
  t.rows = m;
  t.cols = n + n_slack + n_art;
  t.art_begin = n + n_slack;
  t.a.assign(m, std::vector<double>(t.cols + 1, 0.0));
  t.basis.assign(m, 0);

  std::size_t slack_at = n, art_at = t.art_begin;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) t.a[r][j] = rows[r].coeffs[j];
    t.a[r][t.cols] = rows[r].rhs;
    if (rows[r].sense == '<') {
      t.a[r][slack_at] = 1.0;
      t.basis[r] = slack_at++;
    } else if (rows[r].sense == '>') {
      t.a[r][slack_at] = -1.0;
      ++slack_at;
      t.a[r][art_at] = 1.0;
      t.basis[r] = art_at++;
    } else {
      t.a[r][art_at] = 1.0;
      t.basis[r] = art_at++;
    }
  }

  LpSolution out;
  if (n_art > 0) {
    std::vector<double> phase1(t.cols, 0.0);
    for (std::size_t c = t.art_begin; c < t.cols; ++c) phase1[c] = 1.0;
    if (!t.optimize(phase1, /*bar_artificials=*/false))
      throw std::logic_error("phase-1 objective unbounded");
    double art_sum = 0;
    for (std::size_t r = 0; r < m; ++r)
      if (t.basis[r] >= t.art_begin) art_sum += t.rhs(r);
    if (art_sum > 1e-7) {
      out.status = LpSolution::Status::Infeasible;
      return out;
    }
    // Pivot out artificials stuck in the basis at zero.
    for (std::size_t r = 0; r < m; ++r) {
      if (t.basis[r] < t.art_begin) continue;
      for (std::size_t c = 0; c < t.art_begin; ++c) {
        if (std::fabs(t.a[r][c]) > kEps) {
          t.pivot(r, c);
          break;
        }
      }
      // A fully zero row is a redundant constraint; the artificial stays
      // basic at zero and is barred from moving in phase 2.
    }
  }

  std::vector<double> cost(t.cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = lp.objective[j];
  if (!t.optimize(cost, /*bar_artificials=*/true)) {
    out.status = LpSolution::Status::Unbounded;
    return out;
  }

  out.status = LpSolution::Status::Optimal;
  out.x.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    if (t.basis[r] < n) out.x[t.basis[r]] = t.rhs(r);
  out.value = 0;
  for (std::size_t j = 0; j < n; ++j) out.value += lp.objective[j] * out.x[j];
  return out;
}

}  // namespace hgdec
