#pragma once

#include <vector>

#include "invals/instance.hpp"

namespace invals {

// Which COT construction to build for a fixed trailer assignment.
//   probe: the relaxed construction used while scoring candidate trailers;
//          the breach item b has supply M and uncapped per-store cells, so
//          any one-trailer increment stays feasible.
//   final: models the true per-store breach bound b_j <= m, used for the
//          last allocation solve.
enum class CotVariant { probe, final_ };

struct CotCell {
  int source;
  int sink;
  int day;
  long long cap;   // finite after zeta-substitution
  Rat profit;      // alpha[t] q_ij^t on real cells, -gamma on b-to-store, else 0
};

// Balanced capacity-constrained transport instance. Source order: real items,
// then b, then z. Sink order: real stores, then one labour sink per category,
// then the surplus sink e.
struct CotInstance {
  std::vector<long long> supply;  // S_i per source
  std::vector<long long> need;    // M_j per sink
  std::vector<CotCell> cells;
  int num_real_items = 0;
  int num_real_stores = 0;
  int b_source = 0;
  int z_source = 0;
  int first_labour_sink = 0;
  int surplus_sink = 0;
  long long total_mass = 0;  // K

  bool balanced() const;
};

// Shelf elimination: reduce demand from the latest day backwards
// until sum_t D_ij^t <= C_ij for every (item, store). Preserves the optimum
// of the fixed-x allocation LP.
Instance trim_shelf_capacity(const Instance& inst);

// Builds the balanced COT instance for a shelf-trimmed instance and a fixed
// trailer assignment with at least one trailer. Throws std::invalid_argument
// when x_j > R_j for some store.
CotInstance build_cot(const Instance& inst, const TrailerAssignment& x,
                      CotVariant variant);

// Maps a per-cell flow on the COT instance back to an allocation plan:
// real cells become d_ij^t, flow on (b, j, 0) becomes the breach b_j, all
// other pseudo flows are dropped. Throws when the flow violates a cap,
// supply or need of the instance.
AllocationPlan extract_plan(const Instance& inst, const CotInstance& cot,
                            const std::vector<long long>& flow);

struct FeasibleStart {
  CotInstance cot;              // probe instance for the incremented x
  std::vector<long long> flow;  // explicit feasible point
  AllocationPlan plan;
};

// Explicit feasibility witness for adding one trailer at store k: keeps the
// previous allocation, routes the full breach supply M to store k, and lets
// z / e absorb the residuals. Requires the previous plan to be breach-free
// and to satisfy s_j >= M(x_j - y_j) + m for every dispatched store.
FeasibleStart feasible_start(const Instance& inst, const AllocationPlan& prev_plan,
                             const TrailerAssignment& x, int k);

}  // namespace invals
