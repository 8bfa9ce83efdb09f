#include "invals/drm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace invals {

namespace {

inline double logistic(double u) {
  if (u >= 0) return 1.0 / (1.0 + std::exp(-u));
  const double e = std::exp(u);
  return e / (1.0 + e);
}

}  // namespace

double root_find_monotone(const std::function<double(double)>& f, double lo,
                          double hi, double tol) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0) return a;
  if (fb == 0) return b;
  if ((fa > 0) == (fb > 0))
    throw std::invalid_argument("root_find_monotone: endpoints do not bracket");

  double c = a, fc = fa;
  double d = b - a, e = b - a;
  for (int iter = 0; iter < 200; ++iter) {
    if ((fb > 0) == (fc > 0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // secant / inverse quadratic step
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
    fb = f(b);
  }
  return b;
}

namespace {

// Expands [center - w, center + w] geometrically until the decreasing
// function changes sign, then runs Brent. f(-inf) > 0 > f(+inf) must hold.
double solve_decreasing(const std::function<double(double)>& f, double center,
                        double tol) {
  double w = 1.0;
  double lo = center - w, hi = center + w;
  double flo = f(lo), fhi = f(hi);
  int doublings = 0;
  while (flo <= 0 || fhi >= 0) {
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    w *= 2.0;
    if (flo <= 0) { lo = center - w; flo = f(lo); }
    if (fhi >= 0) { hi = center + w; fhi = f(hi); }
    if (++doublings > 200)
      throw std::runtime_error("drm: bracket expansion failed");
  }
  return root_find_monotone(f, lo, hi, tol);
}

}  // namespace

DrmSolution drm_solve(const CotInstance& cot, const DrmParams& params) {
  DrmSolution sol;
  const int num_sources = static_cast<int>(cot.supply.size());
  const int num_sinks = static_cast<int>(cot.need.size());
  const size_t num_cells = cot.cells.size();
  sol.state.log_phi.assign(num_sources, 0.0);
  sol.state.log_psi.assign(num_sinks, 0.0);
  sol.d.assign(num_cells, 0.0);

  const long long K = cot.total_mass;
  if (K == 0) {
    sol.state.converged = true;
    return sol;
  }

  // Analytic pinning: rows/columns whose free cells are forced to zero or to
  // saturation carry duals at +-infinity and are removed from the iteration.
  std::vector<long long> fixed_int(num_cells, -1);  // -1 = free
  std::vector<long long> row_target(cot.supply), col_target(cot.need);
  bool changed = true;
  while (changed) {
    changed = false;
    auto pass = [&](bool rows) {
      const int n = rows ? num_sources : num_sinks;
      std::vector<long long> free_cap(n, 0);
      for (size_t c = 0; c < num_cells; ++c)
        if (fixed_int[c] < 0)
          free_cap[rows ? cot.cells[c].source : cot.cells[c].sink] +=
              cot.cells[c].cap;
      auto& target = rows ? row_target : col_target;
      for (int k = 0; k < n; ++k) {
        if (free_cap[k] == 0) continue;
        if (target[k] != 0 && target[k] != free_cap[k]) continue;
        const long long pin_cap = target[k] == 0 ? 0 : -1;  // 0 or full cap
        for (size_t c = 0; c < num_cells; ++c) {
          const int idx = rows ? cot.cells[c].source : cot.cells[c].sink;
          if (fixed_int[c] >= 0 || idx != k) continue;
          const long long v = pin_cap == 0 ? 0 : cot.cells[c].cap;
          fixed_int[c] = v;
          row_target[cot.cells[c].source] -= v;
          col_target[cot.cells[c].sink] -= v;
        }
        changed = true;
      }
    };
    pass(true);
    pass(false);
  }

  // Structural infeasibility: a residual target that free capacity cannot
  // meet. Surfaces as a flagged non-converged state.
  for (int i = 0; i < num_sources; ++i)
    if (row_target[i] < 0) {
      sol.state.residual = static_cast<double>(-row_target[i]) / K;
      return sol;
    }
  for (int j = 0; j < num_sinks; ++j)
    if (col_target[j] < 0) {
      sol.state.residual = static_cast<double>(-col_target[j]) / K;
      return sol;
    }

  const double scale = static_cast<double>(K);
  std::vector<double> cap(num_cells), lnk(num_cells);
  std::vector<std::vector<int>> row_cells(num_sources), col_cells(num_sinks);
  for (size_t c = 0; c < num_cells; ++c) {
    if (fixed_int[c] >= 0) continue;
    cap[c] = static_cast<double>(cot.cells[c].cap) / scale;
    lnk[c] = to_double(cot.cells[c].profit) / params.mu;
    row_cells[cot.cells[c].source].push_back(static_cast<int>(c));
    col_cells[cot.cells[c].sink].push_back(static_cast<int>(c));
  }
  std::vector<double> row_t(num_sources), col_t(num_sinks);
  std::vector<long long> row_free(num_sources, 0), col_free(num_sinks, 0);
  for (size_t c = 0; c < num_cells; ++c)
    if (fixed_int[c] < 0) {
      row_free[cot.cells[c].source] += cot.cells[c].cap;
      col_free[cot.cells[c].sink] += cot.cells[c].cap;
    }
  for (int i = 0; i < num_sources; ++i) {
    if (row_target[i] > row_free[i]) {
      sol.state.residual =
          static_cast<double>(row_target[i] - row_free[i]) / K;
      return sol;
    }
    row_t[i] = static_cast<double>(row_target[i]) / scale;
  }
  for (int j = 0; j < num_sinks; ++j) {
    if (col_target[j] > col_free[j]) {
      sol.state.residual =
          static_cast<double>(col_target[j] - col_free[j]) / K;
      return sol;
    }
    col_t[j] = static_cast<double>(col_target[j]) / scale;
  }

  auto& a = sol.state.log_phi;
  auto& b = sol.state.log_psi;

  for (int iter = 0; iter < params.max_iter; ++iter) {
    // Row sweep: fix psi, solve g_i = 0 per source.
    for (int i = 0; i < num_sources; ++i) {
      if (row_cells[i].empty()) continue;
      auto g = [&](double ai) {
        double sum = 0.0;
        for (int c : row_cells[i])
          sum += cap[c] * logistic(ai + lnk[c] + b[cot.cells[c].sink]);
        return row_t[i] - sum;
      };
      a[i] = solve_decreasing(g, a[i], params.root_tol);
    }
    // Column sweep: fix phi, solve h_j = 0 per sink.
    for (int j = 0; j < num_sinks; ++j) {
      if (col_cells[j].empty()) continue;
      auto h = [&](double bj) {
        double sum = 0.0;
        for (int c : col_cells[j])
          sum += cap[c] * logistic(a[cot.cells[c].source] + lnk[c] + bj);
        return col_t[j] - sum;
      };
      b[j] = solve_decreasing(h, b[j], params.root_tol);
    }
    sol.state.iterations = iter + 1;

    // Columns are exact right after their sweep; the residual lives in the
    // row marginals.
    double residual = 0.0;
    for (int i = 0; i < num_sources; ++i) {
      if (row_cells[i].empty()) continue;
      double sum = 0.0;
      for (int c : row_cells[i])
        sum += cap[c] * logistic(a[i] + lnk[c] + b[cot.cells[c].sink]);
      residual = std::max(residual, std::abs(sum - row_t[i]));
    }
    sol.state.residual = residual;
    if (residual <= params.eps) {
      sol.state.converged = true;
      break;
    }
  }

  sol.objective = 0.0;
  for (size_t c = 0; c < num_cells; ++c) {
    double dc;
    if (fixed_int[c] >= 0)
      dc = static_cast<double>(fixed_int[c]);
    else
      dc = cap[c] * logistic(a[cot.cells[c].source] + lnk[c] +
                             b[cot.cells[c].sink]) *
           scale;
    sol.d[c] = dc;
    if (dc != 0.0) sol.objective += to_double(cot.cells[c].profit) * dc;
  }
  return sol;
}

std::optional<DrmValue> value_oracle_drm(const Instance& inst,
                                         const TrailerAssignment& x,
                                         CotVariant variant,
                                         const DrmParams& params) {
  if (x.all_zero()) return DrmValue{0.0, true, 0.0};
  const CotInstance cot = build_cot(inst, x, variant);

  // Quick structural check: every marginal must be coverable by its caps.
  std::vector<long long> row_cap(cot.supply.size(), 0);
  std::vector<long long> col_cap(cot.need.size(), 0);
  for (const auto& cell : cot.cells) {
    row_cap[cell.source] += cell.cap;
    col_cap[cell.sink] += cell.cap;
  }
  for (size_t i = 0; i < row_cap.size(); ++i)
    if (row_cap[i] < cot.supply[i]) return std::nullopt;
  for (size_t j = 0; j < col_cap.size(); ++j)
    if (col_cap[j] < cot.need[j]) return std::nullopt;

  DrmSolution sol = drm_solve(cot, params);
  return DrmValue{sol.objective, sol.state.converged, sol.state.residual};
}

}  // namespace invals
