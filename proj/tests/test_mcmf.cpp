#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invals/mcmf.hpp"

using namespace invals;

TEST_CASE("two sources, profitable sink plus overflow") {
  // Sources supply (3, 2); sink needs 4 with per-source caps (3, 3) and
  // profits (5, 1); a zero-profit overflow sink absorbs the spare unit.
  // Optimum ships all 3 high-profit units and 1 cheap unit: 3*5 + 1*1 = 16.
  FlowNetwork net(6);  // 0 super-source, 1-2 sources, 3 sink, 4 overflow, 5 super-sink
  net.add_arc(0, 1, 3, 0);
  net.add_arc(0, 2, 2, 0);
  int a1 = net.add_arc(1, 3, 3, -5);
  int a2 = net.add_arc(2, 3, 3, -1);
  net.add_arc(1, 4, 3, 0);
  net.add_arc(2, 4, 3, 0);
  net.add_arc(3, 5, 4, 0);
  net.add_arc(4, 5, 1, 0);
  auto res = net.solve(0, 5, 5);
  REQUIRE(res.feasible);
  CHECK(res.flow_value == 5);
  CHECK(-res.total_cost == 16);
  CHECK(net.flow_on(a1) == 3);
  CHECK(net.flow_on(a2) == 1);
}

TEST_CASE("single forced cell") {
  FlowNetwork net(3);
  int a = net.add_arc(0, 1, 7, -2);
  net.add_arc(1, 2, 7, 0);
  auto res = net.solve(0, 2, 7);
  REQUIRE(res.feasible);
  CHECK(net.flow_on(a) == 7);
  CHECK(-res.total_cost == 14);
}

TEST_CASE("unreachable demand is infeasible") {
  FlowNetwork net(3);
  net.add_arc(0, 1, 2, 0);
  net.add_arc(1, 2, 2, 0);
  auto res = net.solve(0, 2, 5);
  CHECK_FALSE(res.feasible);
}

TEST_CASE("integrality of flows") {
  // Random-ish dense network with integer data: every arc flow must be
  // integral by construction (long long storage), and conservation holds.
  FlowNetwork net(8);
  int arcs[12];
  int n = 0;
  for (int s = 1; s <= 3; ++s) {
    net.add_arc(0, s, 4, 0);
    for (int t = 4; t <= 6; ++t) arcs[n++] = net.add_arc(s, t, 3, -(s * t % 5));
  }
  for (int t = 4; t <= 6; ++t) net.add_arc(t, 7, 4, 0);
  auto res = net.solve(0, 7, 12);
  REQUIRE(res.feasible);
  long long total = 0;
  for (int k = 0; k < n; ++k) {
    CHECK(net.flow_on(arcs[k]) >= 0);
    CHECK(net.flow_on(arcs[k]) <= 3);
    total += net.flow_on(arcs[k]);
  }
  CHECK(total == 12);
}
