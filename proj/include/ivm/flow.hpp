#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ivm {

// Dinic's blocking-flow max-flow on integer capacities.
class MaxFlow {
 public:
  explicit MaxFlow(int node_count);

  // Returns the edge id used by flow().
  int add_edge(int from, int to, std::int64_t capacity);
  std::int64_t run(int source, int sink);
  std::int64_t flow(int edge_id) const { return edges_[edge_id].flow; }

 private:
  struct Edge {
    int to;
    std::int64_t capacity;
    std::int64_t flow;
  };

  bool build_levels(int source, int sink);
  std::int64_t push(int node, int sink, std::int64_t limit);

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

// Allowed shipment from supply node `from` to demand node `to` (0-based).
struct TransportArc {
  int from = 0;
  int to = 0;
};

// Integral flow per arc (aligned with `arcs`) that ships every supply and
// fills every demand exactly, or nullopt if none exists.
std::optional<std::vector<std::int64_t>> transportation_feasible(
    std::span<const std::int64_t> supplies, std::span<const std::int64_t> demands,
    std::span<const TransportArc> arcs);

}  // namespace ivm
