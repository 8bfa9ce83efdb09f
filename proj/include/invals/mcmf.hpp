#pragma once

#include <vector>

#include "invals/rational.hpp"

namespace invals {

// Directed network for min-cost-flow solves. Costs are integers; callers
// scale rational profits to a common denominator before building arcs.
class FlowNetwork {
 public:
  explicit FlowNetwork(int num_nodes);

  // Returns the arc id, usable to read back the flow after a solve.
  int add_arc(int from, int to, long long cap, long long cost);

  int num_nodes() const { return num_nodes_; }
  long long flow_on(int arc_id) const;

  struct Result {
    bool feasible = false;     // routed the full requested value
    long long flow_value = 0;  // amount actually routed
    BigInt total_cost = 0;     // in scaled cost units
  };

  // Routes `value` units from source to sink at minimum cost (successive
  // shortest paths with node potentials; all flows stay integral).
  Result solve(int source, int sink, long long value);

 private:
  struct Edge {
    int to;
    long long cap;
    long long cost;
    int rev;  // index of the reverse edge in graph_[to]
  };
  int num_nodes_;
  std::vector<std::vector<Edge>> graph_;
  std::vector<std::pair<int, int>> arcs_;  // arc id -> (node, edge index)
};

}  // namespace invals
