#include "invals/instance.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace invals {

int Instance::category_of(int item) const {
  for (int l = 0; l < num_categories(); ++l) {
    for (int i : category_items[l])
      if (i == item) return l;
  }
  return -1;
}

int Instance::max_horizon() const {
  int h = 0;
  for (int t : horizon) h = std::max(h, t);
  return h;
}

long long Instance::total_demand(int i, int j) const {
  const auto& dem = demand[cell(i, j)];
  return std::accumulate(dem.begin(), dem.end(), 0LL);
}

long long TrailerAssignment::total() const {
  return std::accumulate(x.begin(), x.end(), 0LL);
}

TrailerAssignment TrailerAssignment::plus_one(int k) const {
  TrailerAssignment out = *this;
  out.x[k] += 1;
  return out;
}

AllocationPlan AllocationPlan::empty(const Instance& inst) {
  AllocationPlan plan;
  plan.d.resize(inst.demand.size());
  for (size_t c = 0; c < inst.demand.size(); ++c)
    plan.d[c].assign(inst.demand[c].size(), 0);
  plan.breach.assign(inst.num_stores(), 0);
  plan.objective = 0;
  return plan;
}

long long AllocationPlan::alloc(int cell, int day) const {
  if (day >= static_cast<int>(d[cell].size())) return 0;
  return d[cell][day];
}

long long AllocationPlan::s_ij(const Instance& inst, int i, int j) const {
  const auto& v = d[inst.cell(i, j)];
  return std::accumulate(v.begin(), v.end(), 0LL);
}

long long AllocationPlan::s_j(const Instance& inst, int j) const {
  long long total = 0;
  for (int i = 0; i < inst.num_items(); ++i) total += s_ij(inst, i, j);
  return total;
}

long long AllocationPlan::total() const {
  long long total = 0;
  for (const auto& v : d) total += std::accumulate(v.begin(), v.end(), 0LL);
  return total;
}

namespace {

template <class... Args>
std::string fmt(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport rep;
  auto err = [&](std::string m) { rep.errors.push_back(std::move(m)); };

  const int I = inst.num_items();
  const int J = inst.num_stores();
  const int L = inst.num_categories();

  if (static_cast<int>(inst.category_items.size()) != L)
    err("categories: member list count does not match category count");
  if (static_cast<int>(inst.labour_capacity.size()) != L)
    err("labour_capacity: size does not match category count");
  if (static_cast<int>(inst.inventory.size()) != I)
    err("inventory: size does not match item count");
  if (static_cast<int>(inst.max_trailers.size()) != J)
    err("max_trailers: size does not match store count");
  if (static_cast<int>(inst.store_priority.size()) != J)
    err("store_priority: size does not match store count");
  const size_t cells = static_cast<size_t>(I) * J;
  if (inst.shelf_capacity.size() != cells) err("shelf_capacity: wrong cell count");
  if (inst.horizon.size() != cells) err("horizon: wrong cell count");
  if (inst.demand.size() != cells) err("demand: wrong cell count");
  if (inst.item_store_priority.size() != cells)
    err("item_store_priority: wrong cell count");
  if (!rep.ok()) return rep;  // shape errors make field checks meaningless

  // Category membership must partition the item set.
  std::vector<int> seen(I, 0);
  for (int l = 0; l < L; ++l) {
    for (int i : inst.category_items[l]) {
      if (i < 0 || i >= I) {
        err(fmt("categories[", l, "]: invalid item index ", i));
        continue;
      }
      if (seen[i]++)
        err(fmt("categories: item ", inst.items[i], " appears in more than one category"));
    }
  }
  for (int i = 0; i < I; ++i)
    if (!seen[i]) err(fmt("categories: item ", inst.items[i], " belongs to no category"));

  for (int l = 0; l < L; ++l)
    if (inst.labour_capacity[l] < 0)
      err(fmt("labour_capacity[", inst.categories[l], "]: negative"));
  for (int i = 0; i < I; ++i)
    if (inst.inventory[i] < 0) err(fmt("inventory[", inst.items[i], "]: negative"));

  if (inst.trailer_max <= 0) err("trailer_max: must be positive");
  if (inst.trailer_min < 0) err("trailer_min: negative");
  if (inst.trailer_min > inst.trailer_max)
    err("trailer_min exceeds trailer_max");

  for (int j = 0; j < J; ++j) {
    if (inst.max_trailers[j] < 0)
      err(fmt("max_trailers[", inst.stores[j], "]: negative"));
    if (inst.store_priority[j] <= 0)
      err(fmt("store_priority[", inst.stores[j], "]: must be positive"));
  }

  int max_h = 0;
  for (int i = 0; i < I; ++i) {
    for (int j = 0; j < J; ++j) {
      const int c = inst.cell(i, j);
      if (inst.shelf_capacity[c] < 0)
        err(fmt("shelf_capacity[", inst.items[i], ",", inst.stores[j], "]: negative"));
      if (inst.horizon[c] < 0)
        err(fmt("horizon[", inst.items[i], ",", inst.stores[j], "]: negative"));
      max_h = std::max(max_h, inst.horizon[c]);
      const size_t days = static_cast<size_t>(inst.horizon[c]) + 1;
      if (inst.demand[c].size() != days)
        err(fmt("demand[", inst.items[i], ",", inst.stores[j],
                "]: length does not match horizon"));
      if (inst.item_store_priority[c].size() != days)
        err(fmt("item_store_priority[", inst.items[i], ",", inst.stores[j],
                "]: length does not match horizon"));
      for (size_t t = 0; t < inst.demand[c].size(); ++t)
        if (inst.demand[c][t] < 0)
          err(fmt("demand[", inst.items[i], ",", inst.stores[j], ",", t, "]: negative"));
      for (const Rat& q : inst.item_store_priority[c])
        if (q < 0)
          err(fmt("item_store_priority[", inst.items[i], ",", inst.stores[j],
                  "]: negative"));
    }
  }

  if (static_cast<int>(inst.alpha.size()) < max_h + 1)
    err("alpha: shorter than the maximum horizon");
  for (size_t t = 0; t < inst.alpha.size(); ++t) {
    if (inst.alpha[t] <= 0) err(fmt("alpha[", t, "]: must be positive"));
    if (t + 1 < inst.alpha.size() && !(inst.alpha[t + 1] < inst.alpha[t]))
      err(fmt("alpha: not strictly decreasing at index ", t + 1));
  }

  if (inst.beta <= 0) err("beta: must be positive");
  if (inst.gamma < 0) err("gamma: negative");
  if (inst.gamma <= inst.beta)
    rep.warnings.push_back("gamma <= beta: outside the recommended regime");

  return rep;
}

Rat evaluate_objective(const Instance& inst, const TrailerAssignment& x,
                       const AllocationPlan& plan) {
  const int I = inst.num_items();
  const int J = inst.num_stores();
  if (static_cast<int>(x.x.size()) != J || plan.d.size() != inst.demand.size() ||
      static_cast<int>(plan.breach.size()) != J)
    throw std::invalid_argument("evaluate_objective: dimension mismatch");

  Rat obj = 0;
  for (int i = 0; i < I; ++i) {
    for (int j = 0; j < J; ++j) {
      const int c = inst.cell(i, j);
      if (plan.d[c].size() > inst.demand[c].size())
        throw std::invalid_argument("evaluate_objective: plan horizon mismatch");
      for (size_t t = 0; t < plan.d[c].size(); ++t) {
        if (plan.d[c][t] == 0) continue;
        obj += inst.alpha[t] * inst.item_store_priority[c][t] * plan.d[c][t];
      }
    }
  }
  for (int j = 0; j < J; ++j) {
    obj += inst.beta * inst.store_priority[j] * x.x[j];
    obj -= inst.gamma * plan.breach[j];
  }
  return obj;
}

std::vector<std::string> check_feasibility(const Instance& inst,
                                           const TrailerAssignment& x,
                                           const AllocationPlan& plan) {
  std::vector<std::string> out;
  const int I = inst.num_items();
  const int J = inst.num_stores();
  const long long M = inst.trailer_max;
  const long long m = inst.trailer_min;

  for (int i = 0; i < I; ++i) {
    long long total = 0;
    for (int j = 0; j < J; ++j) total += plan.s_ij(inst, i, j);
    if (total > inst.inventory[i])
      out.push_back(fmt("inventory: item ", inst.items[i], " allocates ", total,
                        " > S=", inst.inventory[i]));
  }
  for (int l = 0; l < inst.num_categories(); ++l) {
    long long total = 0;
    for (int i : inst.category_items[l])
      for (int j = 0; j < J; ++j) total += plan.s_ij(inst, i, j);
    if (total > inst.labour_capacity[l])
      out.push_back(fmt("labour: category ", inst.categories[l], " processes ", total,
                        " > H=", inst.labour_capacity[l]));
  }
  for (int j = 0; j < J; ++j) {
    if (x.x[j] > inst.max_trailers[j])
      out.push_back(fmt("planned-trailer: store ", inst.stores[j], " uses ", x.x[j],
                        " > R=", inst.max_trailers[j]));
    const long long sj = plan.s_j(inst, j);
    if (sj > M * x.x[j])
      out.push_back(fmt("max-capacity: store ", inst.stores[j], " loads ", sj, " > ",
                        M * x.x[j]));
    const long long floor = M * (x.x[j] - x.y(j)) + m * x.y(j) - plan.breach[j];
    if (sj < floor)
      out.push_back(fmt("min-capacity: store ", inst.stores[j], " loads ", sj, " < ",
                        floor));
    if (plan.breach[j] < 0 || plan.breach[j] > m)
      out.push_back(fmt("breach: store ", inst.stores[j], " slack ", plan.breach[j],
                        " outside [0, ", m, "]"));
  }
  for (int i = 0; i < I; ++i) {
    for (int j = 0; j < J; ++j) {
      const int c = inst.cell(i, j);
      const long long sij = plan.s_ij(inst, i, j);
      if (sij > inst.shelf_capacity[c])
        out.push_back(fmt("shelf: (", inst.items[i], ",", inst.stores[j], ") holds ",
                          sij, " > C=", inst.shelf_capacity[c]));
      for (size_t t = 0; t < plan.d[c].size(); ++t) {
        if (plan.d[c][t] < 0)
          out.push_back(fmt("demand: (", inst.items[i], ",", inst.stores[j], ",", t,
                            ") negative allocation"));
        else if (plan.d[c][t] > inst.demand[c][t])
          out.push_back(fmt("demand: (", inst.items[i], ",", inst.stores[j], ",", t,
                            ") allocates ", plan.d[c][t], " > D=", inst.demand[c][t]));
      }
    }
  }
  return out;
}

PlanMetrics compute_metrics(const Instance& inst, const TrailerAssignment& x,
                            const AllocationPlan& plan) {
  PlanMetrics m;
  const int J = inst.num_stores();

  m.labour_utilization.resize(inst.num_categories(), 0.0);
  for (int l = 0; l < inst.num_categories(); ++l) {
    long long total = 0;
    for (int i : inst.category_items[l])
      for (int j = 0; j < J; ++j) total += plan.s_ij(inst, i, j);
    if (inst.labour_capacity[l] > 0)
      m.labour_utilization[l] =
          static_cast<double>(total) / static_cast<double>(inst.labour_capacity[l]);
  }

  m.total_allocation = plan.total();
  m.trailer_count = x.total();
  if (m.trailer_count > 0)
    m.trailer_utilization = static_cast<double>(m.total_allocation) /
                            static_cast<double>(inst.trailer_max * m.trailer_count);

  for (int j = 0; j < J; ++j) {
    if (plan.breach[j] > 0) {
      ++m.breach_count;
      m.breach_total += plan.breach[j];
    }
  }

  // Plan quantities are integral by representation.
  m.integrality_fraction = 1.0;

  // DOS(i, j) = latest day with positive allocation, averaged over pairs
  // that received any pull-forward quantity (t >= 1).
  long long dos_sum = 0, dos_pairs = 0;
  for (int i = 0; i < inst.num_items(); ++i) {
    for (int j = 0; j < J; ++j) {
      const auto& v = plan.d[inst.cell(i, j)];
      long long pf = 0;
      int last = 0;
      for (size_t t = 1; t < v.size(); ++t) {
        pf += v[t];
        if (v[t] > 0) last = static_cast<int>(t);
      }
      if (pf > 0) {
        dos_sum += last;
        ++dos_pairs;
      }
    }
  }
  if (dos_pairs > 0)
    m.mean_pf_dos = static_cast<double>(dos_sum) / static_cast<double>(dos_pairs);
  return m;
}

}  // namespace invals
