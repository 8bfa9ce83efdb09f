#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "invals/reduction.hpp"

namespace invals {

struct DrmParams {
  double mu = 1.0;        // entropic regularization weight
  double eps = 1e-6;      // marginal tolerance on the normalized scale
  int max_iter = 10000;   // full row+column sweeps
  double root_tol = 1e-12;
};

// Dual state of the alternating scheme. Potentials are kept in log domain:
// log_phi[i] = ln(phi_i) and log_psi[j] = ln(psi_j), so the cell factor
// 1/(1 + phi K psi) is a logistic of (log_phi + P/mu + log_psi) and large
// negative profits (P = -gamma) cannot underflow.
struct DrmState {
  std::vector<double> log_phi;
  std::vector<double> log_psi;
  double residual = 0.0;  // max |marginal - target| at the last check
  int iterations = 0;
  bool converged = false;
};

struct DrmSolution {
  std::vector<double> d;  // per cell, rescaled back by K
  double objective = 0.0;  // sum of cell profit * d
  DrmState state;
};

// Bracketed derivative-free root finder (Brent: bisection / secant / inverse
// quadratic). Requires f(lo) and f(hi) of opposite sign.
double root_find_monotone(const std::function<double(double)>& f, double lo,
                          double hi, double tol);

// Solves a balanced COT instance by double entropic regularization:
// alternating exact one-dimensional root solves on the monotone dual
// functions of every source then every sink, until the worst marginal
// violation falls below eps (normalized scale) or max_iter is reached.
DrmSolution drm_solve(const CotInstance& cot, const DrmParams& params);

struct DrmValue {
  double value = 0.0;
  bool converged = true;
  double residual = 0.0;  // max marginal violation at the last check
};

// Approximate g(X): used only to rank candidate stores, never to produce a
// final plan. Returns nullopt when the instance is structurally infeasible.
std::optional<DrmValue> value_oracle_drm(const Instance& inst,
                                         const TrailerAssignment& x,
                                         CotVariant variant,
                                         const DrmParams& params);

}  // namespace invals
