#pragma once

#include "invals/exact_oracle.hpp"

namespace invals {

struct GlobalResult {
  TrailerAssignment x;
  AllocationPlan plan;
  Rat objective = 0;
  bool optimal = true;     // false when the node budget ran out
  long long nodes = 0;
};

// Exact maximizer of the full objective over all integer trailer vectors
// x <= R, by depth-first search with an admissible (deliberately loose)
// bound: fixed priority utility + best-case priority utility of unfixed
// stores + the total allocation utility cap. Leaves are scored with the
// exact value oracle. Intended for tiny instances only. Accepts an
// untrimmed instance.
GlobalResult solve_global(const Instance& inst, long long node_budget = 1'000'000);

}  // namespace invals
