#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invals/rational.hpp"

namespace invals {

// Full problem data for one replenishment cycle. Items and stores are
// referenced by dense indices; the string ids exist only for serialization.
// Per-(item,store) data is indexed by cell(i, j) = i * num_stores() + j.
struct Instance {
  std::vector<std::string> items;
  std::vector<std::string> stores;
  std::vector<std::string> categories;
  std::vector<std::vector<int>> category_items;  // per category, item indices
  std::vector<long long> labour_capacity;        // H_l, per category
  std::vector<long long> inventory;              // S_i, per item
  long long trailer_max = 0;                     // M, whpacks per trailer
  long long trailer_min = 0;                     // m
  std::vector<long long> max_trailers;           // R_j, per store
  std::vector<long long> shelf_capacity;         // C_ij, per cell
  std::vector<int> horizon;                      // t_ij, per cell
  std::vector<std::vector<long long>> demand;    // per cell, day 0..t_ij
  std::vector<long long> store_priority;         // p_j
  std::vector<std::vector<Rat>> item_store_priority;  // q_ij^t, per cell per day
  std::vector<Rat> alpha;                        // discount schedule, index by day
  Rat beta;
  Rat gamma;

  int num_items() const { return static_cast<int>(items.size()); }
  int num_stores() const { return static_cast<int>(stores.size()); }
  int num_categories() const { return static_cast<int>(categories.size()); }
  int cell(int i, int j) const { return i * num_stores() + j; }

  // Category of an item, -1 when the item is in no category.
  int category_of(int item) const;

  int max_horizon() const;
  long long total_demand(int i, int j) const;
};

// Integer trailers per store, the set X.
struct TrailerAssignment {
  std::vector<long long> x;

  long long total() const;
  long long y(int j) const { return x[j] > 0 ? 1 : 0; }
  bool all_zero() const { return total() == 0; }
  TrailerAssignment plus_one(int k) const;
};

// Allocation decision: d_ij^t plus the breach slack b_j. All quantities
// produced by the exact solver are integral, so they live in long long.
struct AllocationPlan {
  std::vector<std::vector<long long>> d;  // per cell, day 0..t_ij
  std::vector<long long> breach;          // b_j
  Rat objective;                          // objective value, set by the producer

  static AllocationPlan empty(const Instance& inst);
  long long alloc(int cell, int day) const;
  long long s_ij(const Instance& inst, int i, int j) const;
  long long s_j(const Instance& inst, int j) const;
  long long total() const;
};

struct PlanMetrics {
  std::vector<double> labour_utilization;  // per category
  double trailer_utilization = 0.0;
  long long total_allocation = 0;
  long long trailer_count = 0;
  int breach_count = 0;
  long long breach_total = 0;
  double integrality_fraction = 1.0;
  std::optional<double> mean_pf_dos;  // absent when no pair has pull-forward
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;  // e.g. gamma <= beta (unusual regime)
  bool ok() const { return errors.empty(); }
};

ValidationReport validate_instance(const Instance& inst);

// Objective: sum alpha[t] q d + beta * sum p_j x_j - gamma * sum b_j.
Rat evaluate_objective(const Instance& inst, const TrailerAssignment& x,
                       const AllocationPlan& plan);

// Checks every constraint from the model (inventory, labour, trailer count,
// max/min trailer capacity, shelf, demand bounds, breach bound) and returns
// one line per violation with the remaining slack.
std::vector<std::string> check_feasibility(const Instance& inst,
                                           const TrailerAssignment& x,
                                           const AllocationPlan& plan);

PlanMetrics compute_metrics(const Instance& inst, const TrailerAssignment& x,
                            const AllocationPlan& plan);

}  // namespace invals
