#include "invals/planner.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace invals {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <class V>
V value_from_rat(const Rat& r);
template <>
Rat value_from_rat<Rat>(const Rat& r) { return r; }
template <>
double value_from_rat<double>(const Rat& r) { return to_double(r); }

}  // namespace

template <class V>
NextStoreResult<V> next_best_store(const Instance& inst,
                                   const TrailerAssignment& x,
                                   const std::vector<int>& candidates,
                                   double rho, const V& current_g,
                                   const ValueOracle<V>& oracle,
                                   std::mt19937_64& rng, bool parallel) {
  NextStoreResult<V> res;
  if (candidates.empty()) return res;

  std::vector<int> sampled;
  for (int k : candidates)
    if (uniform01(rng) < rho) sampled.push_back(k);
  if (sampled.empty())
    sampled.push_back(candidates[rng() % candidates.size()]);

  std::vector<std::optional<V>> values(sampled.size());
  if (parallel && sampled.size() > 1) {
    std::vector<std::future<std::optional<V>>> futs;
    futs.reserve(sampled.size());
    for (int k : sampled)
      futs.push_back(std::async(std::launch::async,
                                [&oracle, &x, k] { return oracle(x.plus_one(k)); }));
    for (size_t n = 0; n < futs.size(); ++n) values[n] = futs[n].get();
  } else {
    for (size_t n = 0; n < sampled.size(); ++n)
      values[n] = oracle(x.plus_one(sampled[n]));
  }

  for (size_t n = 0; n < sampled.size(); ++n) {
    GainRecord<V> rec;
    rec.store = sampled[n];
    rec.oracle_value = values[n];
    if (rec.oracle_value) {
      rec.g_gain = *rec.oracle_value - current_g;
      rec.total_gain = rec.g_gain +
                       value_from_rat<V>(inst.beta * inst.store_priority[rec.store]);
    }
    if (!rec.oracle_value || rec.total_gain <= V(0)) res.pruned.push_back(rec.store);
    res.gains.push_back(std::move(rec));
  }

  // Argmax over positive gains; sampled order is ascending id, so keeping
  // only strict improvements breaks ties toward the smallest store id.
  const GainRecord<V>* best = nullptr;
  for (const auto& rec : res.gains) {
    if (!rec.oracle_value || rec.total_gain <= V(0)) continue;
    if (!best || rec.total_gain > best->total_gain) best = &rec;
  }
  if (best) {
    res.best = best->store;
    res.best_oracle_value = *best->oracle_value;
  }
  return res;
}

template NextStoreResult<Rat> next_best_store<Rat>(const Instance&,
                                                   const TrailerAssignment&,
                                                   const std::vector<int>&, double,
                                                   const Rat&,
                                                   const ValueOracle<Rat>&,
                                                   std::mt19937_64&, bool);
template NextStoreResult<double> next_best_store<double>(
    const Instance&, const TrailerAssignment&, const std::vector<int>&, double,
    const double&, const ValueOracle<double>&, std::mt19937_64&, bool);

namespace {

// Stale-gain variant of one selection round: cached gains from earlier
// rounds are upper bounds under diminishing returns, so candidates are
// re-evaluated in bound order until the best fresh gain dominates.
template <class V>
struct LazyCache {
  std::vector<std::optional<V>> bound;  // last known f_X(k)
  std::vector<V> value;                 // g(X + {k}) at the same stamp
  std::vector<long long> stamp;         // trailer count when computed
};

template <class V>
NextStoreResult<V> next_best_store_lazy(const Instance& inst,
                                        const TrailerAssignment& x,
                                        const std::vector<int>& candidates,
                                        double rho, const V& current_g,
                                        const ValueOracle<V>& oracle,
                                        std::mt19937_64& rng,
                                        LazyCache<V>& cache) {
  NextStoreResult<V> res;
  if (candidates.empty()) return res;

  std::vector<int> sampled;
  for (int k : candidates)
    if (uniform01(rng) < rho) sampled.push_back(k);
  if (sampled.empty())
    sampled.push_back(candidates[rng() % candidates.size()]);

  const long long now = x.total();
  auto better = [&](int a, int b) {
    // Unevaluated candidates sort first; then by bound desc, id asc.
    const auto& ba = cache.bound[a];
    const auto& bb = cache.bound[b];
    if (!ba || !bb) return !ba && (bb || a < b);
    if (*ba != *bb) return *ba > *bb;
    return a < b;
  };

  std::vector<int> heap = sampled;
  while (!heap.empty()) {
    std::sort(heap.begin(), heap.end(), better);
    const int k = heap.front();
    if (cache.bound[k] && cache.stamp[k] == now) {
      // Fresh top of the heap dominates every stale bound.
      if (*cache.bound[k] > V(0)) {
        res.best = k;
        res.best_oracle_value = cache.value[k];
      } else {
        // Every remaining bound is <= 0, so every true gain is too.
        res.pruned = heap;
      }
      break;
    }
    auto v = oracle(x.plus_one(k));
    GainRecord<V> rec;
    rec.store = k;
    rec.oracle_value = v;
    if (v) {
      rec.g_gain = *v - current_g;
      rec.total_gain =
          rec.g_gain + value_from_rat<V>(inst.beta * inst.store_priority[k]);
      cache.bound[k] = rec.total_gain;
      cache.value[k] = *v;
      cache.stamp[k] = now;
    }
    res.gains.push_back(rec);
    if (!v || rec.total_gain <= V(0)) {
      res.pruned.push_back(k);
      heap.erase(heap.begin());
    }
  }
  return res;
}

template <class V>
PlanTrailersResult plan_impl(const Instance& inst, const PlannerConfig& cfg,
                             const ValueOracle<V>& oracle,
                             long long& oracle_calls) {
  if (!(cfg.rho > 0.0 && cfg.rho <= 1.0))
    throw std::invalid_argument("plan_trailers: rho outside (0, 1]");

  const int J = inst.num_stores();
  PlanTrailersResult out;
  out.x.x.assign(J, 0);
  std::mt19937_64 rng(cfg.seed);

  std::vector<long long> priorities;
  for (int j = 0; j < J; ++j) priorities.push_back(inst.store_priority[j]);
  std::sort(priorities.rbegin(), priorities.rend());
  priorities.erase(std::unique(priorities.begin(), priorities.end()),
                   priorities.end());

  V current_g = V(0);
  LazyCache<V> cache;
  for (long long p : priorities) {
    std::vector<int> batch;
    for (int j = 0; j < J; ++j)
      if (inst.store_priority[j] == p && inst.max_trailers[j] > 0)
        batch.push_back(j);
    cache.bound.assign(J, std::nullopt);
    cache.value.assign(J, V(0));
    cache.stamp.assign(J, -1);

    while (!batch.empty()) {
      NextStoreResult<V> round =
          cfg.lazy ? next_best_store_lazy<V>(inst, out.x, batch, cfg.rho,
                                             current_g, oracle, rng, cache)
                   : next_best_store<V>(inst, out.x, batch, cfg.rho, current_g,
                                        oracle, rng, cfg.parallel_candidates);
      for (int k : round.pruned)
        batch.erase(std::remove(batch.begin(), batch.end(), k), batch.end());
      if (!round.best) {
        if (round.pruned.empty()) break;  // guard against a stalled round
        continue;
      }
      const int k = *round.best;
      out.x.x[k] += 1;
      current_g = round.best_oracle_value;
      if (out.x.x[k] >= inst.max_trailers[k])
        batch.erase(std::remove(batch.begin(), batch.end(), k), batch.end());
    }
  }
  out.oracle_calls = oracle_calls;
  return out;
}

}  // namespace

PlanTrailersResult plan_trailers(const Instance& inst, const PlannerConfig& cfg) {
  long long calls = 0;
  if (cfg.oracle == OracleKind::exact) {
    ValueOracle<Rat> oracle = [&inst, &cfg, &calls](const TrailerAssignment& x) {
      ++calls;
      return value_oracle_exact(inst, x, cfg.variant);
    };
    return plan_impl<Rat>(inst, cfg, oracle, calls);
  }
  bool all_converged = true;
  ValueOracle<double> oracle =
      [&inst, &cfg, &calls, &all_converged](
          const TrailerAssignment& x) -> std::optional<double> {
    ++calls;
    auto v = value_oracle_drm(inst, x, cfg.variant, cfg.drm);
    if (!v) return std::nullopt;
    if (!v->converged) all_converged = false;
    return v->value;
  };
  auto res = plan_impl<double>(inst, cfg, oracle, calls);
  res.drm_all_converged = all_converged;
  return res;
}

FullSolveResult full_solve(const Instance& inst, const PlannerConfig& cfg) {
  const Instance trimmed = trim_shelf_capacity(inst);
  FullSolveResult out;
  auto planned = plan_trailers(trimmed, cfg);
  out.x = planned.x;
  out.oracle_calls = planned.oracle_calls;
  out.drm_all_converged = planned.drm_all_converged;
  out.plan = final_allocate(trimmed, out.x);
  out.plan.objective = evaluate_objective(trimmed, out.x, out.plan);
  out.metrics = compute_metrics(trimmed, out.x, out.plan);
  return out;
}

SubmodularityAudit audit_submodularity(const Instance& inst, int n_triplets,
                                       std::uint64_t seed) {
  const Instance trimmed = trim_shelf_capacity(inst);
  const int J = inst.num_stores();
  std::mt19937_64 rng(seed);
  SubmodularityAudit audit;

  auto g = [&](const TrailerAssignment& x) {
    return value_oracle_exact(trimmed, x, CotVariant::final_);
  };

  long long attempts = 0;
  const long long max_attempts = 200LL * n_triplets + 100;
  while (static_cast<int>(audit.differences.size()) < n_triplets) {
    if (++attempts > max_attempts)
      throw std::runtime_error("audit_submodularity: sampling exhaustion");
    TrailerAssignment Y;
    Y.x.resize(J);
    for (int j = 0; j < J; ++j)
      Y.x[j] = inst.max_trailers[j] > 0
                   ? static_cast<long long>(rng() % (inst.max_trailers[j] + 1))
                   : 0;
    std::vector<int> room;
    for (int j = 0; j < J; ++j)
      if (Y.x[j] < inst.max_trailers[j]) room.push_back(j);
    if (room.empty()) continue;
    const int k = room[rng() % room.size()];
    auto gYk = g(Y.plus_one(k));
    if (!gYk) continue;  // Y + {k} must be feasible

    TrailerAssignment X;
    X.x.resize(J);
    for (int j = 0; j < J; ++j)
      X.x[j] = static_cast<long long>(rng() % (Y.x[j] + 1));
    auto gY = g(Y);
    auto gX = g(X);
    auto gXk = g(X.plus_one(k));
    if (!gY || !gX || !gXk)
      throw std::logic_error("audit_submodularity: subset became infeasible");
    const Rat diff = (*gXk - *gX) - (*gYk - *gY);
    audit.differences.push_back(diff);
  }
  audit.min_difference = *std::min_element(audit.differences.begin(),
                                           audit.differences.end());
  return audit;
}

}  // namespace invals
