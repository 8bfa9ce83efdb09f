#include "invals/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace invals {

bool CotInstance::balanced() const {
  long long s = std::accumulate(supply.begin(), supply.end(), 0LL);
  long long n = std::accumulate(need.begin(), need.end(), 0LL);
  return s == n && s == total_mass;
}

Instance trim_shelf_capacity(const Instance& inst) {
  Instance out = inst;
  for (int i = 0; i < inst.num_items(); ++i) {
    for (int j = 0; j < inst.num_stores(); ++j) {
      const int c = inst.cell(i, j);
      long long excess = inst.total_demand(i, j) - inst.shelf_capacity[c];
      auto& dem = out.demand[c];
      for (int t = static_cast<int>(dem.size()) - 1; t >= 0 && excess > 0; --t) {
        const long long cut = std::min(excess, dem[t]);
        dem[t] -= cut;
        excess -= cut;
      }
    }
  }
  return out;
}

CotInstance build_cot(const Instance& inst, const TrailerAssignment& x,
                      CotVariant variant) {
  const int I = inst.num_items();
  const int J = inst.num_stores();
  const int L = inst.num_categories();
  const long long M = inst.trailer_max;
  const long long m = inst.trailer_min;

  if (x.total() <= 0)
    throw std::invalid_argument("build_cot: assignment has no trailers");
  for (int j = 0; j < J; ++j)
    if (x.x[j] > inst.max_trailers[j])
      throw std::invalid_argument("build_cot: x exceeds max_trailers at store " +
                                  inst.stores[j]);

  CotInstance cot;
  cot.num_real_items = I;
  cot.num_real_stores = J;
  cot.b_source = I;
  cot.z_source = I + 1;
  cot.first_labour_sink = J;
  cot.surplus_sink = J + L;

  cot.supply.assign(I + 2, 0);
  for (int i = 0; i < I; ++i) cot.supply[i] = inst.inventory[i];
  long long supply_b = (variant == CotVariant::probe) ? M : m * J;
  cot.supply[cot.z_source] = (M - m) * J;

  cot.need.assign(J + L + 1, 0);
  for (int j = 0; j < J; ++j) cot.need[j] = M * x.x[j];
  for (int l = 0; l < L; ++l) {
    long long avail = 0;
    for (int i : inst.category_items[l]) avail += inst.inventory[i];
    cot.need[J + l] = std::max(0LL, avail - inst.labour_capacity[l]);
  }

  long long total_supply = supply_b;
  for (long long s : cot.supply) total_supply += s;
  long long total_need =
      std::accumulate(cot.need.begin(), cot.need.end(), 0LL);
  if (total_supply >= total_need) {
    cot.need[cot.surplus_sink] = total_supply - total_need;
  } else {
    // Inventory deficit: extend the breach supply so the shortfall is priced
    // at -gamma like any other breach.
    supply_b += total_need - total_supply;
    total_supply = total_need;
  }
  cot.supply[cot.b_source] = supply_b;
  cot.total_mass = total_supply;

  // Real cells.
  for (int i = 0; i < I; ++i) {
    for (int j = 0; j < J; ++j) {
      if (x.x[j] == 0) continue;
      const int c = inst.cell(i, j);
      for (size_t t = 0; t < inst.demand[c].size(); ++t) {
        if (inst.demand[c][t] == 0) continue;
        cot.cells.push_back({i, j, static_cast<int>(t), inst.demand[c][t],
                             inst.alpha[t] * inst.item_store_priority[c][t]});
      }
    }
  }
  // Breach item b: priced -gamma into dispatched stores at day 0. The probe
  // variant leaves the per-store cell uncapped (zeta-substituted with S_b);
  // the final variant caps it at m.
  for (int j = 0; j < J; ++j) {
    if (x.x[j] == 0) continue;
    const long long cap = (variant == CotVariant::probe) ? supply_b : m;
    if (cap > 0)
      cot.cells.push_back({cot.b_source, j, 0, cap, -inst.gamma});
  }
  // Filler item z: tops up the last trailer to M at zero profit.
  for (int j = 0; j < J; ++j) {
    if (x.x[j] == 0 || M - m == 0) continue;
    cot.cells.push_back({cot.z_source, j, 0, M - m, Rat(0)});
  }
  // Labour sinks absorb exactly the over-capacity part of each category.
  for (int l = 0; l < L; ++l) {
    if (cot.need[J + l] == 0) continue;
    for (int i : inst.category_items[l]) {
      if (inst.inventory[i] == 0) continue;
      cot.cells.push_back({i, J + l, 0, inst.inventory[i], Rat(0)});
    }
  }
  // Surplus sink e takes the leftovers of every source.
  if (cot.need[cot.surplus_sink] > 0) {
    for (int i = 0; i < I + 2; ++i) {
      if (cot.supply[i] == 0) continue;
      cot.cells.push_back({i, cot.surplus_sink, 0, cot.supply[i], Rat(0)});
    }
  }
  return cot;
}

AllocationPlan extract_plan(const Instance& inst, const CotInstance& cot,
                            const std::vector<long long>& flow) {
  if (flow.size() != cot.cells.size())
    throw std::invalid_argument("extract_plan: flow size mismatch");

  std::vector<long long> out_src(cot.supply.size(), 0);
  std::vector<long long> in_sink(cot.need.size(), 0);
  for (size_t c = 0; c < flow.size(); ++c) {
    const auto& cell = cot.cells[c];
    if (flow[c] < 0 || flow[c] > cell.cap)
      throw std::invalid_argument("extract_plan: flow violates a cell cap");
    out_src[cell.source] += flow[c];
    in_sink[cell.sink] += flow[c];
  }
  for (size_t i = 0; i < out_src.size(); ++i)
    if (out_src[i] != cot.supply[i])
      throw std::invalid_argument("extract_plan: unbalanced flow at a source");
  for (size_t j = 0; j < in_sink.size(); ++j)
    if (in_sink[j] != cot.need[j])
      throw std::invalid_argument("extract_plan: unbalanced flow at a sink");

  AllocationPlan plan = AllocationPlan::empty(inst);
  for (size_t c = 0; c < flow.size(); ++c) {
    const auto& cell = cot.cells[c];
    if (cell.sink >= cot.num_real_stores) continue;
    if (cell.source < cot.num_real_items)
      plan.d[inst.cell(cell.source, cell.sink)][cell.day] += flow[c];
    else if (cell.source == cot.b_source)
      plan.breach[cell.sink] += flow[c];
  }
  return plan;
}

FeasibleStart feasible_start(const Instance& inst, const AllocationPlan& prev_plan,
                             const TrailerAssignment& x, int k) {
  const int I = inst.num_items();
  const int J = inst.num_stores();
  const long long M = inst.trailer_max;
  const long long m = inst.trailer_min;

  if (k < 0 || k >= J || x.x[k] < 1)
    throw std::invalid_argument("feasible_start: k is not an incremented store");
  TrailerAssignment prev = x;
  prev.x[k] -= 1;

  for (int j = 0; j < J; ++j) {
    if (prev_plan.breach[j] != 0)
      throw std::invalid_argument("feasible_start: previous plan has breach slack");
    if (prev.x[j] >= 1 && prev_plan.s_j(inst, j) < M * (prev.x[j] - 1) + m)
      throw std::invalid_argument(
          "feasible_start: previous plan violates the min-capacity floor at store " +
          inst.stores[j]);
    if (prev.x[j] == 0 && prev_plan.s_j(inst, j) != 0)
      throw std::invalid_argument(
          "feasible_start: previous plan ships to an undispatched store");
  }

  FeasibleStart fs;
  fs.cot = build_cot(inst, x, CotVariant::probe);
  fs.flow.assign(fs.cot.cells.size(), 0);

  // Remaining supply per source after the explicit assignments below.
  std::vector<long long> leftover = fs.cot.supply;
  std::vector<long long> z_fill(J, 0);
  for (int j = 0; j < J; ++j) {
    if (x.x[j] == 0) continue;
    const long long b = (j == k) ? M : 0;
    z_fill[j] = M * x.x[j] - prev_plan.s_j(inst, j) - b;
    if (z_fill[j] < 0 || z_fill[j] > M - m)
      throw std::logic_error("feasible_start: filler flow out of range");
  }

  // Labour needs, filled greedily from each category's unallocated inventory.
  std::vector<long long> labour_left(inst.num_categories());
  for (int l = 0; l < inst.num_categories(); ++l)
    labour_left[l] = fs.cot.need[fs.cot.first_labour_sink + l];
  std::vector<long long> item_left(I);
  for (int i = 0; i < I; ++i) {
    item_left[i] = inst.inventory[i];
    for (int j = 0; j < J; ++j) item_left[i] -= prev_plan.s_ij(inst, i, j);
  }

  for (size_t c = 0; c < fs.cot.cells.size(); ++c) {
    const auto& cell = fs.cot.cells[c];
    if (cell.sink < J && cell.source < I) {
      fs.flow[c] = prev_plan.alloc(inst.cell(cell.source, cell.sink), cell.day);
    } else if (cell.sink < J && cell.source == fs.cot.b_source) {
      fs.flow[c] = (cell.sink == k) ? M : 0;
    } else if (cell.sink < J && cell.source == fs.cot.z_source) {
      fs.flow[c] = z_fill[cell.sink];
    } else if (cell.sink >= J && cell.sink < fs.cot.surplus_sink &&
               cell.source < I) {
      const int l = cell.sink - fs.cot.first_labour_sink;
      const long long take = std::min(labour_left[l], item_left[cell.source]);
      fs.flow[c] = take;
      labour_left[l] -= take;
      item_left[cell.source] -= take;
    }
    leftover[cell.source] -= fs.flow[c];
  }
  for (long long v : labour_left)
    if (v != 0) throw std::logic_error("feasible_start: labour sink left unfilled");

  for (size_t c = 0; c < fs.cot.cells.size(); ++c) {
    const auto& cell = fs.cot.cells[c];
    if (cell.sink == fs.cot.surplus_sink) fs.flow[c] = leftover[cell.source];
  }

  fs.plan = extract_plan(inst, fs.cot, fs.flow);  // also validates the flow
  return fs;
}

}  // namespace invals
