#include "invals/mcmf.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace invals {

namespace {
constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
}

FlowNetwork::FlowNetwork(int num_nodes)
    : num_nodes_(num_nodes), graph_(num_nodes) {}

int FlowNetwork::add_arc(int from, int to, long long cap, long long cost) {
  if (from < 0 || from >= num_nodes_ || to < 0 || to >= num_nodes_)
    throw std::invalid_argument("add_arc: node out of range");
  if (cap < 0) throw std::invalid_argument("add_arc: negative capacity");
  Edge fwd{to, cap, cost, static_cast<int>(graph_[to].size())};
  Edge bwd{from, 0, -cost, static_cast<int>(graph_[from].size())};
  graph_[from].push_back(fwd);
  graph_[to].push_back(bwd);
  arcs_.emplace_back(from, static_cast<int>(graph_[from].size()) - 1);
  return static_cast<int>(arcs_.size()) - 1;
}

long long FlowNetwork::flow_on(int arc_id) const {
  const auto& [node, idx] = arcs_.at(arc_id);
  const Edge& e = graph_[node][idx];
  // Flow equals the capacity moved onto the reverse edge.
  return graph_[e.to][e.rev].cap;
}

FlowNetwork::Result FlowNetwork::solve(int source, int sink, long long value) {
  Result res;
  if (value == 0) {
    res.feasible = true;
    return res;
  }

  // Initial potentials by Bellman-Ford, so negative profit arcs become
  // non-negative reduced costs for the Dijkstra phases.
  std::vector<long long> potential(num_nodes_, kInf);
  potential[source] = 0;
  for (int pass = 0; pass < num_nodes_; ++pass) {
    bool changed = false;
    for (int u = 0; u < num_nodes_; ++u) {
      if (potential[u] == kInf) continue;
      for (const Edge& e : graph_[u]) {
        if (e.cap > 0 && potential[u] + e.cost < potential[e.to]) {
          potential[e.to] = potential[u] + e.cost;
          changed = true;
        }
      }
    }
    if (!changed) break;
    if (pass == num_nodes_ - 1)
      throw std::logic_error("solve: negative cycle in flow network");
  }
  for (long long& p : potential)
    if (p == kInf) p = 0;  // unreachable nodes never lie on a shortest path

  std::vector<long long> dist(num_nodes_);
  std::vector<int> prev_node(num_nodes_), prev_edge(num_nodes_);

  while (res.flow_value < value) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[source] = 0;
    using Item = std::pair<long long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.emplace(0, source);
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d > dist[u]) continue;
      for (size_t k = 0; k < graph_[u].size(); ++k) {
        const Edge& e = graph_[u][k];
        if (e.cap == 0) continue;
        const long long nd = d + e.cost + potential[u] - potential[e.to];
        if (nd < dist[e.to]) {
          dist[e.to] = nd;
          prev_node[e.to] = u;
          prev_edge[e.to] = static_cast<int>(k);
          pq.emplace(nd, e.to);
        }
      }
    }
    if (dist[sink] == kInf) return res;  // cannot route more: infeasible

    for (int u = 0; u < num_nodes_; ++u)
      if (dist[u] < kInf) potential[u] += dist[u];

    long long push = value - res.flow_value;
    for (int u = sink; u != source; u = prev_node[u])
      push = std::min(push, graph_[prev_node[u]][prev_edge[u]].cap);
    for (int u = sink; u != source; u = prev_node[u]) {
      Edge& e = graph_[prev_node[u]][prev_edge[u]];
      e.cap -= push;
      graph_[u][e.rev].cap += push;
      res.total_cost += BigInt(e.cost) * push;
    }
    res.flow_value += push;
  }
  res.feasible = true;
  return res;
}

}  // namespace invals
