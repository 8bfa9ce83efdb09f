#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "invals/global.hpp"
#include "invals/planner.hpp"

using namespace invals;
using fixtures::t1;

TEST_CASE("T1 global optimum") {
  GlobalResult res = solve_global(t1());
  CHECK(res.x.x == std::vector<long long>{1});
  CHECK(res.objective == Rat(106));
  CHECK(res.optimal);
}

TEST_CASE("all-zero demand with costly breach") {
  Instance inst = t1();
  inst.demand = {{0, 0}};
  GlobalResult res = solve_global(inst);
  CHECK(res.x.total() == 0);
  CHECK(res.objective == 0);
}

TEST_CASE("single trailer's worth of inventory goes to the better store") {
  Instance inst = t1();
  inst.stores = {"j1", "j2"};
  inst.max_trailers = {2, 2};
  inst.store_priority = {1, 3};
  inst.shelf_capacity = {100, 100};
  inst.horizon = {1, 1};
  inst.demand = {{4, 4}, {4, 4}};
  inst.item_store_priority = {{1, 1}, {1, 1}};
  inst.inventory = {8};
  inst.trailer_min = 8;
  GlobalResult res = solve_global(inst);
  CHECK(res.x.x == std::vector<long long>{0, 1});
}

TEST_CASE("node budget exhaustion is flagged") {
  Instance inst = fixtures::medium_small(1);
  GlobalResult res = solve_global(inst, 2);
  CHECK_FALSE(res.optimal);
}

TEST_CASE("greedy never beats the global optimum") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Instance inst = fixtures::small(seed);
    GlobalResult global = solve_global(inst);
    FullSolveResult greedy = full_solve(inst, PlannerConfig{});
    CHECK(greedy.plan.objective <= global.objective);
    CHECK(check_feasibility(inst, global.x, global.plan).empty());
  }
}
