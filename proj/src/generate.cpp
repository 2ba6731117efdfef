#include "ivm/generate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "ivm/error.hpp"

namespace ivm {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) { return next() % bound; }

bool SplitMix64::chance(double p) {
  return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
}

namespace {

Triple random_triple(SplitMix64& rng, int n) {
  const int x = static_cast<int>(rng.below(n)) + 1;
  const int y = static_cast<int>(rng.below(n)) + 1;
  const int z = static_cast<int>(rng.below(n)) + 1;
  return {x, y, z};
}

// Adds `count` distinct triples not yet in `taken`. Sparse requests use
// rejection; dense ones shuffle the full candidate list and take a prefix.
void add_distinct(SplitMix64& rng, int n, std::int64_t count, std::set<Triple>& taken,
                  std::vector<Triple>& out) {
  const std::int64_t cube = static_cast<std::int64_t>(n) * n * n;
  if (2 * (static_cast<std::int64_t>(taken.size()) + count) <= cube) {
    while (count > 0) {
      const Triple t = random_triple(rng, n);
      if (!taken.insert(t).second) continue;
      out.push_back(t);
      --count;
    }
    return;
  }
  std::vector<Triple> free;
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      for (int z = 1; z <= n; ++z) {
        if (!taken.contains({x, y, z})) free.push_back({x, y, z});
      }
    }
  }
  rng.shuffle(free);
  for (std::int64_t i = 0; i < count; ++i) {
    taken.insert(free[i]);
    out.push_back(free[i]);
  }
}

std::vector<int> permutation(SplitMix64& rng, int size) {
  std::vector<int> p(size);
  std::iota(p.begin(), p.end(), 1);
  rng.shuffle(p);
  return p;
}

}  // namespace

TripartiteHypergraph generate_3dm(const Gen3dmConfig& config) {
  const std::int64_t cube = static_cast<std::int64_t>(config.n) * config.n * config.n;
  if (config.n < 0 || config.m < 0 || config.m > cube) {
    throw Error(ErrorCode::kInvalidArgument, "need n >= 0 and 0 <= m <= n^3");
  }
  if (config.planted && config.m < config.n) {
    throw Error(ErrorCode::kInvalidArgument, "a planted instance needs m >= n");
  }
  SplitMix64 rng(config.seed);
  TripartiteHypergraph h;
  h.n = config.n;
  std::set<Triple> taken;
  std::int64_t remaining = config.m;
  if (config.planted) {
    const auto ys = permutation(rng, config.n);
    const auto zs = permutation(rng, config.n);
    for (int x = 1; x <= config.n; ++x) {
      const Triple t{x, ys[x - 1], zs[x - 1]};
      taken.insert(t);
      h.edges.push_back(t);
    }
    remaining -= config.n;
  }
  add_distinct(rng, config.n, remaining, taken, h.edges);
  rng.shuffle(h.edges);
  return h;
}

LayeredGraph generate_ivg(const GenIvgConfig& config) {
  if (config.layers < 2 || config.layers > kMaxLayers) {
    throw Error(ErrorCode::kInvalidArgument, "layers must be in 2.." + std::to_string(kMaxLayers));
  }
  if (config.max_cluster_size < 1 || config.max_clusters < 1) {
    throw Error(ErrorCode::kInvalidArgument, "cluster bounds must be positive");
  }
  if (!(config.density >= 0.0 && config.density <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "density must lie in [0, 1]");
  }
  SplitMix64 rng(config.seed);
  const int ell = config.layers;
  const auto size_draw = [&] { return static_cast<std::int64_t>(rng.below(config.max_cluster_size)) + 1; };
  const auto count_draw = [&] { return static_cast<int>(rng.below(config.max_clusters)) + 1; };

  LayeredGraph g;
  if (!config.planted) {
    for (int k = 1; k <= ell; ++k) {
      std::vector<std::int64_t> sizes(count_draw());
      for (auto& s : sizes) s = size_draw();
      g.layers.push_back(std::move(sizes));
    }
    for (int k = 1; k < ell; ++k) {
      const int lower = g.cluster_count(k);
      const int upper = g.cluster_count(k + 1);
      if (k % 2 == 1) {
        for (int j = 1; j <= lower; ++j) {
          for (int jj = 1; jj <= upper; ++jj) {
            if (rng.chance(config.density)) g.macroedges.push_back({k, j, jj});
          }
        }
      } else {
        const auto lo = permutation(rng, lower);
        const auto hi = permutation(rng, upper);
        for (int t = 0; t < std::min(lower, upper); ++t) {
          if (rng.chance(config.density)) g.macroedges.push_back({k, lo[t], hi[t]});
        }
      }
    }
    return canonical(std::move(g));
  }

  // Planted: grow the graph from shape counts. `free_up[j]` is the number of
  // vertices of cluster j on the current odd layer still waiting for an I.
  std::vector<std::int64_t> first(count_draw());
  for (auto& s : first) s = size_draw();
  g.layers.push_back(first);
  std::vector<std::int64_t> free_up = first;
  for (int odd = 1; odd < ell; odd += 2) {
    const int even = odd + 1;
    const std::int64_t supply = std::accumulate(free_up.begin(), free_up.end(), std::int64_t{0});
    const int even_count =
        static_cast<int>(std::max<std::int64_t>(1, std::min<std::int64_t>(count_draw(), supply)));
    std::vector<std::vector<std::int64_t>> flow(free_up.size(),
                                                std::vector<std::int64_t>(even_count, 0));
    std::vector<std::int64_t> even_sizes(even_count, 0);
    for (std::size_t a = 0; a < free_up.size(); ++a) {
      for (std::int64_t u = 0; u < free_up[a]; ++u) {
        const auto b = rng.below(even_count);
        ++flow[a][b];
        ++even_sizes[b];
      }
    }
    for (std::size_t a = 0; a < free_up.size(); ++a) {
      for (int b = 0; b < even_count; ++b) {
        if (flow[a][b] > 0 || rng.chance(config.density)) {
          g.macroedges.push_back({odd, static_cast<int>(a) + 1, b + 1});
        }
      }
    }
    if (even == ell) {
      g.layers.push_back(std::move(even_sizes));
      break;
    }

    const int next = even + 1;
    const bool last = next == ell;
    int odd_count = count_draw();
    if (last) odd_count = std::min(odd_count, even_count);
    const auto lo = permutation(rng, even_count);
    const auto hi = permutation(rng, odd_count);
    const int matched = std::min(even_count, odd_count);
    std::vector<std::int64_t> odd_sizes(odd_count, 0);
    free_up.assign(odd_count, 0);
    for (int t = 0; t < odd_count; ++t) {
      const int c = hi[t] - 1;
      std::int64_t centers = 0;
      if (t < matched) {
        centers = last ? size_draw() : static_cast<std::int64_t>(rng.below(config.max_cluster_size + 1));
        even_sizes[lo[t] - 1] += 2 * centers;
        g.macroedges.push_back({even, lo[t], hi[t]});
      }
      std::int64_t ups = last ? 0 : static_cast<std::int64_t>(rng.below(config.max_cluster_size + 1));
      if (!last && centers + ups == 0) ups = 1;
      odd_sizes[c] = centers + ups;
      free_up[c] = ups;
    }
    g.layers.push_back(std::move(even_sizes));
    g.layers.push_back(std::move(odd_sizes));
  }
  return normalize(g).graph;
}

}  // namespace ivm
