#pragma once

#include "invals/gen.hpp"
#include "invals/instance.hpp"

namespace invals::fixtures {

// Single item, single store, two days: demand (4, 4), S = 10, M = 8, m = 3,
// H = 100, alpha = (1, 1/2), q = 1, beta = 100, p = 1, gamma = 1000.
// Best one-trailer plan ships everything: g = 6, full objective 106.
inline Instance t1() {
  Instance inst;
  inst.items = {"i1"};
  inst.stores = {"j1"};
  inst.categories = {"c1"};
  inst.category_items = {{0}};
  inst.labour_capacity = {100};
  inst.inventory = {10};
  inst.trailer_max = 8;
  inst.trailer_min = 3;
  inst.max_trailers = {2};
  inst.shelf_capacity = {100};
  inst.horizon = {1};
  inst.demand = {{4, 4}};
  inst.store_priority = {1};
  inst.item_store_priority = {{1, 1}};
  inst.alpha = {1, Rat(1, 2)};
  inst.beta = 100;
  inst.gamma = 1000;
  return inst;
}

// T1 with demand (2, 0): one dispatched trailer cannot reach the minimum
// fill of 3, so a breach of 1 is forced.
inline Instance t2() {
  Instance inst = t1();
  inst.demand = {{2, 0}};
  return inst;
}

inline TrailerAssignment zero_x(const Instance& inst) {
  TrailerAssignment x;
  x.x.assign(inst.num_stores(), 0);
  return x;
}

inline TrailerAssignment one_x(const Instance& inst, int j = 0,
                               long long count = 1) {
  TrailerAssignment x = zero_x(inst);
  x.x[j] = count;
  return x;
}

inline Instance small(std::uint64_t seed) {
  GenConfig cfg = preset("small-corpus");
  cfg.seed = seed;
  return generate(cfg);
}

// A slightly richer corpus instance: 3 stores, 4 items, still within the
// brute-force budget.
inline Instance medium_small(std::uint64_t seed) {
  GenConfig cfg = preset("small-corpus");
  cfg.num_items = 4;
  cfg.num_stores = 3;
  cfg.num_categories = 2;
  cfg.demand_rate = 0.6;
  cfg.demand_cap = 2;
  cfg.trailer_max = 5;
  cfg.trailer_min = 2;
  cfg.seed = seed;
  return generate(cfg);
}

}  // namespace invals::fixtures
