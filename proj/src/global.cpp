#include "invals/global.hpp"

#include <algorithm>
#include <numeric>

namespace invals {

namespace {

struct Search {
  const Instance& inst;
  std::vector<int> order;       // store indices, most influential first
  Rat alloc_cap;                // sum of alpha q D over all cells
  std::vector<Rat> tail_bonus;  // beta * sum p_j R_j over order[depth..]
  long long budget;
  long long nodes = 0;
  bool exhausted = false;

  TrailerAssignment x;
  Rat priority_part = 0;  // beta * sum of fixed p_j x_j
  bool found = false;
  TrailerAssignment best_x;
  Rat best = 0;

  void dfs(size_t depth) {
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    if (found && priority_part + tail_bonus[depth] + alloc_cap <= best)
      return;  // admissible bound cannot beat the incumbent
    if (depth == order.size()) {
      auto g = value_oracle_exact(inst, x, CotVariant::final_);
      if (!g) return;
      const Rat f = *g + priority_part;
      if (!found || f > best) {
        best = f;
        best_x = x;
        found = true;
      }
      return;
    }
    const int j = order[depth];
    for (long long v = 0; v <= inst.max_trailers[j] && !exhausted; ++v) {
      x.x[j] = v;
      priority_part += inst.beta * inst.store_priority[j] * v;
      dfs(depth + 1);
      priority_part -= inst.beta * inst.store_priority[j] * v;
    }
    x.x[j] = 0;
  }
};

}  // namespace

GlobalResult solve_global(const Instance& inst, long long node_budget) {
  const Instance trimmed = trim_shelf_capacity(inst);
  Search s{trimmed};
  s.budget = node_budget;
  s.order.resize(trimmed.num_stores());
  std::iota(s.order.begin(), s.order.end(), 0);
  std::sort(s.order.begin(), s.order.end(), [&](int a, int b) {
    if (trimmed.store_priority[a] != trimmed.store_priority[b])
      return trimmed.store_priority[a] > trimmed.store_priority[b];
    return a < b;
  });

  s.alloc_cap = 0;
  for (size_t c = 0; c < trimmed.demand.size(); ++c)
    for (size_t t = 0; t < trimmed.demand[c].size(); ++t)
      s.alloc_cap +=
          trimmed.alpha[t] * trimmed.item_store_priority[c][t] * trimmed.demand[c][t];

  s.tail_bonus.assign(s.order.size() + 1, Rat(0));
  for (int d = static_cast<int>(s.order.size()) - 1; d >= 0; --d) {
    const int j = s.order[d];
    s.tail_bonus[d] = s.tail_bonus[d + 1] +
                      trimmed.beta * trimmed.store_priority[j] * trimmed.max_trailers[j];
  }

  s.x.x.assign(trimmed.num_stores(), 0);
  s.dfs(0);

  GlobalResult res;
  res.nodes = s.nodes;
  res.optimal = !s.exhausted;
  if (!s.found) {
    // x = 0 is always available with an empty plan.
    res.x.x.assign(trimmed.num_stores(), 0);
    res.plan = AllocationPlan::empty(trimmed);
    res.objective = 0;
    return res;
  }
  res.x = s.best_x;
  res.objective = s.best;
  res.plan = final_allocate(trimmed, res.x);
  res.plan.objective = evaluate_objective(trimmed, res.x, res.plan);
  return res;
}

}  // namespace invals
