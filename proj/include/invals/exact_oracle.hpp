#pragma once

#include <optional>
#include <vector>

#include "invals/reduction.hpp"

namespace invals {

struct CotSolution {
  std::vector<long long> flow;  // per cell, integral
  Rat objective;                // sum of cell profit * flow
};

// Exact solve of a balanced COT instance as an integral min-cost flow.
// Returns nullopt when the full mass K cannot be routed (infeasible).
std::optional<CotSolution> solve_cot_exact(const CotInstance& cot);

// g(X) of the fixed-x allocation LP, computed exactly through the COT
// reduction. Returns 0 for the all-zero assignment and nullopt when the
// instance admits no feasible allocation for x. Expects a shelf-trimmed
// instance.
std::optional<Rat> value_oracle_exact(const Instance& inst,
                                      const TrailerAssignment& x,
                                      CotVariant variant);

// Final allocation for a planned x: exact solve of the final-variant COT,
// extracted back to d / b. The plan's objective field carries the full objective
// value. Throws when no feasible allocation exists.
AllocationPlan final_allocate(const Instance& inst, const TrailerAssignment& x);

// Independent test oracle: exhaustive search over integral d with the
// breach set to its pointwise minimum (optimal for gamma >= 0). Returns
// nullopt when nothing is feasible. Throws std::length_error when the
// enumeration space prod(D+1) exceeds `budget`.
std::optional<Rat> brute_force_optimum(const Instance& inst,
                                       const TrailerAssignment& x,
                                       long long budget = 10'000'000);

}  // namespace invals
