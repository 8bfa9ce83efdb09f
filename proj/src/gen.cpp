#include "invals/gen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace invals {
namespace {

// mt19937_64 draws mapped explicitly so the value stream is stable across
// standard library implementations (std::poisson_distribution is not).
double uniform01(std::mt19937_64& rng) {
  return (rng() >> 11) * 0x1.0p-53;
}

long long uniform_int(std::mt19937_64& rng, long long lo, long long hi) {
  long long span = hi - lo + 1;
  long long k = static_cast<long long>(uniform01(rng) * static_cast<double>(span));
  return lo + std::min(k, span - 1);
}

// Inverse-CDF Poisson, truncated at cap.
long long poisson_draw(std::mt19937_64& rng, double lambda, long long cap) {
  double u = uniform01(rng);
  double p = std::exp(-lambda);
  double acc = p;
  long long k = 0;
  while (u > acc && k < cap) {
    ++k;
    p *= lambda / static_cast<double>(k);
    acc += p;
  }
  return k;
}

}  // namespace

Instance generate(const GenConfig& cfg) {
  if (cfg.num_items <= 0 || cfg.num_stores <= 0 || cfg.num_categories <= 0)
    throw std::invalid_argument("gen: counts must be positive");
  if (cfg.horizon_min < 0 || cfg.horizon_max < cfg.horizon_min)
    throw std::invalid_argument("gen: bad horizon range");
  if (cfg.trailer_min > cfg.trailer_max || cfg.trailer_min < 0)
    throw std::invalid_argument("gen: bad trailer capacity range");
  if (cfg.alpha_num <= 0 || cfg.alpha_den <= cfg.alpha_num)
    throw std::invalid_argument("gen: alpha ratio must be in (0, 1)");

  std::mt19937_64 rng(cfg.seed);
  const int I = cfg.num_items, J = cfg.num_stores, L = cfg.num_categories;
  const int H = cfg.horizon_max;

  Instance inst;
  for (int i = 0; i < I; ++i) inst.items.push_back("item-" + std::to_string(i));
  for (int j = 0; j < J; ++j) inst.stores.push_back("store-" + std::to_string(j));
  for (int l = 0; l < L; ++l)
    inst.categories.push_back("cat-" + std::to_string(l));
  inst.category_items.resize(L);
  for (int i = 0; i < I; ++i) inst.category_items[i % L].push_back(i);

  // A few items dominate demand; weekday pattern modulates the rest.
  std::vector<double> item_mult(I);
  for (int i = 0; i < I; ++i) {
    double u = uniform01(rng);
    item_mult[i] = 0.4 + 3.2 * u * u * u;
  }
  static const double kDayPattern[4] = {1.3, 1.0, 0.8, 0.6};

  // Full-horizon draw: demand for every day up to horizon_max, independent
  // of pf_enabled. Capacities below are sized from this draw, so configs
  // that differ only in the pf/q/price knobs share them exactly.
  std::vector<int> full_horizon(I * J);
  std::vector<std::vector<long long>> full_demand(I * J);
  for (int i = 0; i < I; ++i) {
    for (int j = 0; j < J; ++j) {
      int c = inst.cell(i, j);
      full_horizon[c] = static_cast<int>(
          uniform_int(rng, cfg.horizon_min, cfg.horizon_max));
      full_demand[c].resize(H + 1);
      for (int t = 0; t <= H; ++t)
        full_demand[c][t] = poisson_draw(
            rng, cfg.demand_rate * item_mult[i] * kDayPattern[t % 4],
            cfg.demand_cap);
    }
  }

  inst.inventory.resize(I);
  for (int i = 0; i < I; ++i) {
    long long tot = 0;
    for (int j = 0; j < J; ++j)
      for (long long v : full_demand[inst.cell(i, j)]) tot += v;
    inst.inventory[i] = static_cast<long long>(
        std::ceil(cfg.inventory_slack * static_cast<double>(tot)));
  }

  inst.labour_capacity.resize(L);
  for (int l = 0; l < L; ++l) {
    long long tot = 0;
    for (int i : inst.category_items[l])
      for (int j = 0; j < J; ++j)
        for (long long v : full_demand[inst.cell(i, j)]) tot += v;
    inst.labour_capacity[l] = std::max<long long>(
        1, std::llround(cfg.labour_tightness * static_cast<double>(tot)));
  }

  inst.trailer_max = cfg.trailer_max;
  inst.trailer_min = cfg.trailer_min;
  inst.max_trailers.resize(J);
  inst.store_priority.resize(J);
  for (int j = 0; j < J; ++j) {
    inst.max_trailers[j] = uniform_int(
        rng, std::max<long long>(1, cfg.max_trailers - 1),
        std::max<long long>(1, cfg.max_trailers));
    inst.store_priority[j] = uniform_int(rng, 1, std::max<long long>(1, cfg.priority_levels));
  }

  inst.shelf_capacity.resize(I * J);
  for (int c = 0; c < I * J; ++c) {
    long long tot = 0;
    for (long long v : full_demand[c]) tot += v;
    inst.shelf_capacity[c] = static_cast<long long>(
        std::ceil(cfg.shelf_slack * static_cast<double>(tot)));
  }

  // Projection step: apply pf and the q mode. No draws past this point.
  long long dmax = 1;
  for (int c = 0; c < I * J; ++c)
    for (long long v : full_demand[c]) dmax = std::max(dmax, v);

  inst.horizon.resize(I * J);
  inst.demand.resize(I * J);
  inst.item_store_priority.resize(I * J);
  for (int c = 0; c < I * J; ++c) {
    int h = cfg.pf_enabled ? full_horizon[c] : 0;
    inst.horizon[c] = h;
    inst.demand[c].assign(full_demand[c].begin(),
                          full_demand[c].begin() + h + 1);
    inst.item_store_priority[c].resize(h + 1);
    for (int t = 0; t <= h; ++t)
      inst.item_store_priority[c][t] =
          cfg.q_mode == QMode::constant
              ? Rat(1)
              : Rat(inst.demand[c][t], dmax);
  }

  inst.alpha.resize(H + 1);
  Rat ratio(cfg.alpha_num, cfg.alpha_den);
  Rat a(1);
  for (int t = 0; t <= H; ++t) {
    inst.alpha[t] = a;
    a *= ratio;
  }
  inst.beta = cfg.beta;
  inst.gamma = cfg.gamma;
  return inst;
}

GenConfig preset(const std::string& name) {
  GenConfig c;
  if (name == "expA" || name == "expB" || name == "expC" || name == "expD") {
    c.num_items = 15;
    c.num_stores = 5;
    c.num_categories = 2;
    c.horizon_min = 3;
    c.horizon_max = 3;
    c.demand_rate = 1.5;
    c.demand_cap = 8;
    c.inventory_slack = 1.3;
    c.labour_tightness = 0.95;
    c.trailer_max = 30;
    c.trailer_min = 18;
    c.max_trailers = 4;
    c.shelf_slack = 1.2;
    c.priority_levels = 2;
    c.beta = 2;
    if (name == "expA") {
      c.pf_enabled = false;
      c.q_mode = QMode::constant;
      c.gamma = 0;
    } else if (name == "expB") {
      c.pf_enabled = true;
      c.q_mode = QMode::constant;
      c.gamma = 0;
    } else if (name == "expC") {
      c.pf_enabled = true;
      c.q_mode = QMode::constant;
      c.gamma = 30;
    } else {
      c.pf_enabled = true;
      c.q_mode = QMode::proportional;
      c.gamma = 30;
    }
    return c;
  }
  if (name == "small-corpus") {
    c.num_items = 2;
    c.num_stores = 2;
    c.num_categories = 1;
    c.horizon_min = 0;
    c.horizon_max = 1;
    c.demand_rate = 0.9;
    c.demand_cap = 3;
    c.inventory_slack = 1.0;
    c.labour_tightness = 0.9;
    c.trailer_max = 4;
    c.trailer_min = 2;
    c.max_trailers = 2;
    c.shelf_slack = 0.9;
    c.priority_levels = 2;
    c.beta = 2;
    c.gamma = 5;
    c.pf_enabled = true;
    c.q_mode = QMode::proportional;
    return c;
  }
  if (name == "medium-bench") {
    c.num_items = 500;
    c.num_stores = 50;
    c.num_categories = 5;
    c.horizon_min = 2;
    c.horizon_max = 3;
    c.demand_rate = 1.2;
    c.demand_cap = 6;
    c.inventory_slack = 1.05;
    c.labour_tightness = 0.7;
    c.trailer_max = 1000;
    c.trailer_min = 600;
    c.max_trailers = 1;
    c.shelf_slack = 1.2;
    c.priority_levels = 3;
    c.beta = 2;
    c.gamma = 30;
    c.pf_enabled = true;
    c.q_mode = QMode::proportional;
    return c;
  }
  throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace invals
