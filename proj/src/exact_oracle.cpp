#include "invals/exact_oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "invals/mcmf.hpp"

namespace invals {

std::optional<CotSolution> solve_cot_exact(const CotInstance& cot) {
  const int num_sources = static_cast<int>(cot.supply.size());
  const int num_sinks = static_cast<int>(cot.need.size());
  const int src = num_sources + num_sinks;
  const int dst = src + 1;
  FlowNetwork net(num_sources + num_sinks + 2);

  // Scale all profits to a common denominator so arc costs are integral.
  BigInt lcd = 1;
  for (const auto& cell : cot.cells)
    lcd = boost::multiprecision::lcm(lcd, denominator(cell.profit));

  std::vector<int> cell_arc(cot.cells.size());
  for (size_t c = 0; c < cot.cells.size(); ++c) {
    const auto& cell = cot.cells[c];
    const BigInt cost = -numerator(cell.profit) * (lcd / denominator(cell.profit));
    if (abs(cost) > BigInt(std::numeric_limits<long long>::max() / 16))
      throw std::overflow_error("solve_cot_exact: scaled cost out of range");
    cell_arc[c] = net.add_arc(cell.source, num_sources + cell.sink, cell.cap,
                              cost.convert_to<long long>());
  }
  for (int i = 0; i < num_sources; ++i) net.add_arc(src, i, cot.supply[i], 0);
  for (int j = 0; j < num_sinks; ++j)
    net.add_arc(num_sources + j, dst, cot.need[j], 0);

  auto result = net.solve(src, dst, cot.total_mass);
  if (!result.feasible) return std::nullopt;

  CotSolution sol;
  sol.flow.resize(cot.cells.size());
  sol.objective = 0;
  for (size_t c = 0; c < cot.cells.size(); ++c) {
    sol.flow[c] = net.flow_on(cell_arc[c]);
    if (sol.flow[c] != 0) sol.objective += cot.cells[c].profit * sol.flow[c];
  }
  return sol;
}

std::optional<Rat> value_oracle_exact(const Instance& inst,
                                      const TrailerAssignment& x,
                                      CotVariant variant) {
  if (x.all_zero()) return Rat(0);
  const CotInstance cot = build_cot(inst, x, variant);
  auto sol = solve_cot_exact(cot);
  if (!sol) return std::nullopt;
  // Pseudo cells other than b-to-store carry zero profit, so the COT
  // objective already equals the real + breach profit.
  return sol->objective;
}

AllocationPlan final_allocate(const Instance& inst, const TrailerAssignment& x) {
  if (x.all_zero()) return AllocationPlan::empty(inst);
  const CotInstance cot = build_cot(inst, x, CotVariant::final_);
  auto sol = solve_cot_exact(cot);
  if (!sol)
    throw std::runtime_error("final_allocate: no feasible allocation for x");
  AllocationPlan plan = extract_plan(inst, cot, sol->flow);
  // Shrink each breach to the minimal feasible value for the extracted
  // loads: with gamma >= 0 any extra breach is never better, and when
  // gamma = 0 the flow only fixes the total, not its split, so this also
  // makes the emitted plan deterministic.
  for (int j = 0; j < inst.num_stores(); ++j) {
    const long long floor_j =
        inst.trailer_max * (x.x[j] - x.y(j)) + inst.trailer_min * x.y(j);
    plan.breach[j] = std::min(plan.breach[j], std::max(0LL, floor_j - plan.s_j(inst, j)));
  }
  plan.objective = evaluate_objective(inst, x, plan);
  return plan;
}

namespace {

struct BruteCell {
  int item, store, day;
  long long cap;
  Rat unit_profit;
};

struct BruteState {
  const Instance& inst;
  const TrailerAssignment& x;
  std::vector<BruteCell> cells;
  std::vector<long long> item_used;   // per item
  std::vector<long long> cat_used;    // per category
  std::vector<long long> pair_used;   // per cell(i, j)
  std::vector<long long> store_used;  // s_j
  std::vector<int> item_cat;
  Rat alloc_value = 0;
  bool found = false;
  Rat best = 0;

  void leaf() {
    // Minimal breach per store; gamma >= 0 makes it optimal, any larger
    // feasible breach only costs more.
    Rat value = alloc_value;
    for (int j = 0; j < inst.num_stores(); ++j) {
      const long long xj = x.x[j];
      if (xj == 0) {
        if (store_used[j] > 0) return;  // max-capacity: nothing may ship
        continue;
      }
      if (store_used[j] > inst.trailer_max * xj) return;
      const long long floor = inst.trailer_max * (xj - 1) + inst.trailer_min;
      const long long breach = std::max(0LL, floor - store_used[j]);
      if (breach > inst.trailer_min) return;  // b_j <= m cannot close the gap
      if (breach > 0) value -= inst.gamma * breach;
    }
    if (!found || value > best) {
      best = value;
      found = true;
    }
  }

  void search(size_t c) {
    if (c == cells.size()) {
      leaf();
      return;
    }
    const BruteCell& cell = cells[c];
    for (long long q = 0; q <= cell.cap; ++q) {
      if (q > 0) {
        // incremental feasibility pruning
        if (item_used[cell.item] + q > inst.inventory[cell.item]) break;
        const int cat = item_cat[cell.item];
        if (cat >= 0 && cat_used[cat] + q > inst.labour_capacity[cat]) break;
        const int pc = inst.cell(cell.item, cell.store);
        if (pair_used[pc] + q > inst.shelf_capacity[pc]) break;
        if (store_used[cell.store] + q > inst.trailer_max * x.x[cell.store]) break;
      }
      apply(cell, q);
      alloc_value += cell.unit_profit * q;
      search(c + 1);
      alloc_value -= cell.unit_profit * q;
      apply(cell, -q);
    }
  }

  void apply(const BruteCell& cell, long long delta) {
    item_used[cell.item] += delta;
    const int cat = item_cat[cell.item];
    if (cat >= 0) cat_used[cat] += delta;
    pair_used[inst.cell(cell.item, cell.store)] += delta;
    store_used[cell.store] += delta;
  }
};

}  // namespace

std::optional<Rat> brute_force_optimum(const Instance& inst,
                                       const TrailerAssignment& x,
                                       long long budget) {
  BruteState st{inst, x};
  st.item_used.assign(inst.num_items(), 0);
  st.cat_used.assign(inst.num_categories(), 0);
  st.pair_used.assign(inst.demand.size(), 0);
  st.store_used.assign(inst.num_stores(), 0);
  st.item_cat.resize(inst.num_items());
  for (int i = 0; i < inst.num_items(); ++i) st.item_cat[i] = inst.category_of(i);

  double space = 1.0;
  for (int i = 0; i < inst.num_items(); ++i) {
    for (int j = 0; j < inst.num_stores(); ++j) {
      if (x.x[j] == 0) continue;  // nothing may ship there
      const int c = inst.cell(i, j);
      for (size_t t = 0; t < inst.demand[c].size(); ++t) {
        if (inst.demand[c][t] == 0) continue;
        space *= static_cast<double>(inst.demand[c][t] + 1);
        st.cells.push_back({i, j, static_cast<int>(t), inst.demand[c][t],
                            inst.alpha[t] * inst.item_store_priority[c][t]});
      }
    }
  }
  if (space > static_cast<double>(budget))
    throw std::length_error("brute_force_optimum: enumeration budget exceeded");

  st.search(0);
  if (!st.found) return std::nullopt;
  return st.best;
}

}  // namespace invals
