#include "lsft/simplex.hpp"

#include <cassert>

namespace lsft {

namespace {

// Dense phase-I simplex tableau. Columns: structural variables (x = u - w
// split), slacks, artificials; one row per constraint plus the objective.
struct Tableau {
  Mat a;           // m x n coefficient rows
  Vec b;           // m right-hand sides (>= 0)
  Vec cost;        // n phase-I costs
  Vec obj;         // reduced costs (maintained)
  Rat obj_val;     // current (negated) objective value
  std::vector<int> basis;

  int m() const { return static_cast<int>(a.size()); }
  int n() const { return a.empty() ? 0 : static_cast<int>(a[0].size()); }

  void pivot(int row, int col) {
    const Rat inv = Rat(1) / a[row][col];
    for (Rat& v : a[row]) v *= inv;
    b[row] *= inv;
    for (int i = 0; i < m(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rat f = a[i][col];
      for (int j = 0; j < n(); ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    if (obj[col] != 0) {
      const Rat f = obj[col];
      for (int j = 0; j < n(); ++j) obj[j] -= f * a[row][j];
      obj_val -= f * b[row];
    }
    basis[row] = col;
  }

  // Bland's rule: entering = lowest-index column with negative reduced cost;
  // leaving = lowest-index basic variable among the tightest ratios.
  bool optimize() {
    for (;;) {
      int col = -1;
      for (int j = 0; j < n(); ++j)
        if (obj[j] < 0) { col = j; break; }
      if (col < 0) return true;
      int row = -1;
      Rat best;
      for (int i = 0; i < m(); ++i) {
        if (a[i][col] <= 0) continue;
        const Rat ratio = b[i] / a[i][col];
        if (row < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[row])) {
          row = i;
          best = ratio;
        }
      }
      if (row < 0) return false;  // unbounded (cannot happen in phase I)
      pivot(row, col);
    }
  }
};

}  // namespace

std::optional<Vec> lp_feasible(const LinearProgram& lp) {
  const int nx = lp.nvars;
  const int nge = static_cast<int>(lp.ge.size());
  const int m = nge + static_cast<int>(lp.eq.size());
  if (m == 0) return Vec(nx, Rat(0));
  // Columns: 2*nx split vars, nge slacks, m artificials.
  const int ncols = 2 * nx + nge + m;
  Tableau t;
  t.a.assign(m, Vec(ncols, Rat(0)));
  t.b.assign(m, Rat(0));
  t.obj.assign(ncols, Rat(0));
  t.obj_val = 0;
  t.basis.assign(m, -1);

  int row = 0;
  auto fill = [&](const Vec& coef, const Rat& rhs, int slack_col) {
    assert(static_cast<int>(coef.size()) == nx);
    for (int j = 0; j < nx; ++j) {
      t.a[row][2 * j] = coef[j];
      t.a[row][2 * j + 1] = -coef[j];
    }
    if (slack_col >= 0) t.a[row][slack_col] = -1;  // a.x - s = b
    t.b[row] = rhs;
    ++row;
  };
  for (int k = 0; k < nge; ++k) fill(lp.ge[k].first, lp.ge[k].second, 2 * nx + k);
  for (const auto& [coef, rhs] : lp.eq) fill(coef, rhs, -1);

  // Normalize to b >= 0, then install artificial basis and phase-I costs.
  for (int i = 0; i < m; ++i) {
    if (t.b[i] < 0) {
      for (Rat& v : t.a[i]) v = -v;
      t.b[i] = -t.b[i];
    }
    const int art = 2 * nx + nge + i;
    t.a[i][art] = 1;
    t.basis[i] = art;
  }
  for (int i = 0; i < m; ++i) {
    const int art = 2 * nx + nge + i;
    t.obj[art] = 0;
    // Reduced costs for cost vector e_artificials with artificial basis:
    // obj_j = -sum_i a[i][j] for structural/slack columns.
  }
  for (int j = 0; j < ncols; ++j) {
    if (j >= 2 * nx + nge) continue;
    Rat s = 0;
    for (int i = 0; i < m; ++i) s += t.a[i][j];
    t.obj[j] = -s;
  }
  for (int i = 0; i < m; ++i) t.obj_val -= t.b[i];

  if (!t.optimize()) return std::nullopt;
  if (t.obj_val != 0) return std::nullopt;  // infeasible: artificials remain

  // Drive any degenerate artificial out of the basis if possible; a stuck
  // artificial at value 0 does not affect the solution read-out.
  Vec x(nx, Rat(0));
  for (int i = 0; i < m; ++i) {
    const int c = t.basis[i];
    if (c < 2 * nx) {
      const int j = c / 2;
      if (c % 2 == 0)
        x[j] += t.b[i];
      else
        x[j] -= t.b[i];
    }
  }
  return x;
}

}  // namespace lsft
