#include "ivm/flow.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace ivm {

MaxFlow::MaxFlow(int node_count) : out_(node_count), level_(node_count), next_(node_count) {}

int MaxFlow::add_edge(int from, int to, std::int64_t capacity) {
  const int id = static_cast<int>(edges_.size());
  edges_.push_back({to, capacity, 0});
  edges_.push_back({from, 0, 0});
  out_[from].push_back(id);
  out_[to].push_back(id + 1);
  return id;
}

bool MaxFlow::build_levels(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int id : out_[u]) {
      const Edge& e = edges_[id];
      if (e.capacity - e.flow > 0 && level_[e.to] < 0) {
        level_[e.to] = level_[u] + 1;
        queue.push(e.to);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t MaxFlow::push(int node, int sink, std::int64_t limit) {
  if (node == sink) return limit;
  for (auto& i = next_[node]; i < out_[node].size(); ++i) {
    const int id = out_[node][i];
    Edge& e = edges_[id];
    if (e.capacity - e.flow <= 0 || level_[e.to] != level_[node] + 1) continue;
    const std::int64_t pushed = push(e.to, sink, std::min(limit, e.capacity - e.flow));
    if (pushed > 0) {
      e.flow += pushed;
      edges_[id ^ 1].flow -= pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(int source, int sink) {
  constexpr auto kInf = std::numeric_limits<std::int64_t>::max();
  std::int64_t total = 0;
  while (build_levels(source, sink)) {
    std::fill(next_.begin(), next_.end(), 0);
    while (const std::int64_t pushed = push(source, sink, kInf)) total += pushed;
  }
  return total;
}

std::optional<std::vector<std::int64_t>> transportation_feasible(
    std::span<const std::int64_t> supplies, std::span<const std::int64_t> demands,
    std::span<const TransportArc> arcs) {
  const std::int64_t supply = std::accumulate(supplies.begin(), supplies.end(), std::int64_t{0});
  const std::int64_t demand = std::accumulate(demands.begin(), demands.end(), std::int64_t{0});
  if (supply != demand) return std::nullopt;

  const int s_count = static_cast<int>(supplies.size());
  const int d_count = static_cast<int>(demands.size());
  const int source = s_count + d_count;
  const int sink = source + 1;
  MaxFlow net(sink + 1);
  for (int i = 0; i < s_count; ++i) net.add_edge(source, i, supplies[i]);
  std::vector<int> arc_ids;
  arc_ids.reserve(arcs.size());
  for (const auto& a : arcs) {
    arc_ids.push_back(net.add_edge(a.from, s_count + a.to,
                                   std::min(supplies[a.from], demands[a.to])));
  }
  for (int j = 0; j < d_count; ++j) net.add_edge(s_count + j, sink, demands[j]);

  if (net.run(source, sink) != supply) return std::nullopt;
  std::vector<std::int64_t> flows;
  flows.reserve(arcs.size());
  for (int id : arc_ids) flows.push_back(net.flow(id));
  return flows;
}

}  // namespace ivm
