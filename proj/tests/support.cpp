#include "support.hpp"

#include <algorithm>
#include <functional>

namespace ivm::testing {

bool has_perfect_bipartite_matching(const LayeredGraph& g) {
  const ExplicitGraph x = expand_vertices(g);
  std::vector<std::size_t> left, right;
  for (std::size_t v = 0; v < x.vertices.size(); ++v) {
    (x.vertices[v].layer == 1 ? left : right).push_back(v);
  }
  if (left.size() != right.size()) return false;
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> mate(x.vertices.size(), kNone);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) {
    for (auto w : x.adjacency[u]) {
      if (seen[w]) continue;
      seen[w] = 1;
      if (mate[w] == kNone || augment(mate[w])) {
        mate[w] = u;
        mate[u] = w;
        return true;
      }
    }
    return false;
  };
  for (auto u : left) {
    seen.assign(x.vertices.size(), 0);
    if (!augment(u)) return false;
  }
  return true;
}

bool shape_ok(const LayeredGraph& g, const ShapeI& s) {
  return g.contains(s.a) && g.contains(s.b) && s.a.layer % 2 == 1 &&
         s.b.layer == s.a.layer + 1 && g.has_macroedge(s.a.layer, s.a.cluster, s.b.cluster);
}

bool shape_ok(const LayeredGraph& g, const ShapeV& s) {
  return g.contains(s.center) && g.contains(s.left) && g.contains(s.right) &&
         s.center.layer % 2 == 1 && s.left.layer + 1 == s.center.layer &&
         s.right.layer + 1 == s.center.layer && s.left != s.right &&
         s.left.cluster == s.right.cluster &&
         g.has_macroedge(s.left.layer, s.left.cluster, s.center.cluster);
}

std::vector<std::int64_t> v_per_interface(const LayeredGraph& g, const IVMatching& m) {
  const int interfaces = g.layer_count() >= 1 ? (g.layer_count() - 1) / 2 : 0;
  std::vector<std::int64_t> counts(interfaces, 0);
  for (const auto& v : m.vs) ++counts[v.left.layer / 2 - 1];
  return counts;
}

std::int64_t explicit_edge_count(const LayeredGraph& g) {
  std::int64_t total = 0;
  for (const auto& e : g.macroedges) {
    total += g.cluster_size(e.layer, e.from) * g.cluster_size(e.layer + 1, e.to);
  }
  return total;
}

std::vector<TripartiteHypergraph> random_3dm_corpus(int count, std::uint64_t seed, int max_n,
                                                    int max_m) {
  SplitMix64 rng(seed);
  std::vector<TripartiteHypergraph> corpus;
  for (int i = 0; i < count; ++i) {
    Gen3dmConfig config;
    config.seed = rng.next();
    config.n = static_cast<int>(rng.below(max_n + 1));
    const int cap = std::min(max_m, config.n * config.n * config.n);
    config.m = config.n + static_cast<int>(rng.below(cap - config.n + 1));
    config.planted = i % 2 == 0;
    corpus.push_back(generate_3dm(config));
  }
  return corpus;
}

std::vector<LayeredGraph> random_layered_corpus(int count, std::uint64_t seed, int min_layers,
                                                int max_layers, std::int64_t max_vertices,
                                                Parity parity) {
  SplitMix64 rng(seed);
  std::vector<LayeredGraph> corpus;
  static constexpr double kDensities[] = {0.2, 0.5, 0.8, 1.0};
  while (static_cast<int>(corpus.size()) < count) {
    GenIvgConfig config;
    config.seed = rng.next();
    config.layers = min_layers + static_cast<int>(rng.below(max_layers - min_layers + 1));
    if ((parity == Parity::kOdd && config.layers % 2 == 0) ||
        (parity == Parity::kEven && config.layers % 2 == 1)) {
      continue;
    }
    config.max_cluster_size = 1 + static_cast<int>(rng.below(3));
    config.max_clusters = 1 + static_cast<int>(rng.below(3));
    config.density = kDensities[rng.below(4)];
    config.planted = rng.below(2) == 0;
    LayeredGraph g = generate_ivg(config);
    if (g.vertex_count() > max_vertices) continue;
    corpus.push_back(std::move(g));
  }
  return corpus;
}

}  // namespace ivm::testing
