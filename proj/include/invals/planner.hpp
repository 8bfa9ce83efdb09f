#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "invals/drm.hpp"
#include "invals/exact_oracle.hpp"

namespace invals {

enum class OracleKind { exact, drm };

struct PlannerConfig {
  double rho = 1.0;  // store selection probability, in (0, 1]
  OracleKind oracle = OracleKind::exact;
  CotVariant variant = CotVariant::final_;
  std::uint64_t seed = 0;
  bool lazy = false;  // stale-gain max-heap instead of a full batch scan
  bool parallel_candidates = false;
  DrmParams drm;
};

// Value oracle for the planner: g(X), or nullopt when no allocation is
// feasible for X (such candidates are pruned). V is Rat for the exact
// oracle and double for DRM.
template <class V>
using ValueOracle = std::function<std::optional<V>(const TrailerAssignment&)>;

// Per-candidate evaluation during one selection round.
template <class V>
struct GainRecord {
  int store = -1;
  std::optional<V> oracle_value;  // g(X + {k}); nullopt when infeasible
  V g_gain{};                     // g(X + {k}) - g(X)
  V total_gain{};                 // g_gain + beta * p_k
};

template <class V>
struct NextStoreResult {
  std::optional<int> best;           // argmax store with positive gain
  V best_oracle_value{};             // g(X + {best}), for caching
  std::vector<int> pruned;           // sampled stores with gain <= 0
  std::vector<GainRecord<V>> gains;  // every evaluated candidate
};

// One selection round: samples candidates independently with probability rho
// (uniform single fallback on an empty draw), scores the incremental gain
// f_X(k) = g(X + {k}) - g(X) + beta * p_k for each, and returns the argmax
// when its gain is positive, ties broken by smallest store id.
template <class V>
NextStoreResult<V> next_best_store(const Instance& inst,
                                   const TrailerAssignment& x,
                                   const std::vector<int>& candidates,
                                   double rho, const V& current_g,
                                   const ValueOracle<V>& oracle,
                                   std::mt19937_64& rng,
                                   bool parallel = false);

struct PlanTrailersResult {
  TrailerAssignment x;
  long long oracle_calls = 0;
  bool drm_all_converged = true;  // false when any DRM call was flagged
};

// Batched stochastic greedy over decreasing store priority; the accumulated
// x carries across batches. Instance must be validated and shelf-trimmed.
PlanTrailersResult plan_trailers(const Instance& inst, const PlannerConfig& cfg);

struct FullSolveResult {
  TrailerAssignment x;
  AllocationPlan plan;
  PlanMetrics metrics;
  long long oracle_calls = 0;
  bool drm_all_converged = true;
};

// Three-step pipeline: shelf trim, greedy trailer assignment, exact final
// allocation, metrics. Accepts an untrimmed instance.
FullSolveResult full_solve(const Instance& inst, const PlannerConfig& cfg);

struct SubmodularityAudit {
  std::vector<Rat> differences;  // g_X(k) - g_Y(k) per sampled triplet
  Rat min_difference = 0;
};

// Samples nested pairs X <= Y (componentwise) with Y + {k} feasible and
// compares incremental gains under the exact final-variant oracle. Throws
// std::runtime_error when feasible triplets cannot be sampled.
SubmodularityAudit audit_submodularity(const Instance& inst, int n_triplets,
                                       std::uint64_t seed);

}  // namespace invals
