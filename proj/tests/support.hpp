#pragma once

// Test-only oracles and corpus builders. Nothing here calls the solver.

#include <cstdint>
#include <vector>

#include "ivm/generate.hpp"
#include "ivm/hypergraph.hpp"
#include "ivm/model.hpp"

namespace ivm::testing {

// Kuhn's augmenting-path matcher on the explicit two-layer graph: true iff
// every vertex can be matched.
bool has_perfect_bipartite_matching(const LayeredGraph& g);

// Structural validity of a single shape, checked straight from the cluster
// description (no coverage conditions).
bool shape_ok(const LayeredGraph& g, const ShapeI& s);
bool shape_ok(const LayeredGraph& g, const ShapeV& s);

// V-shapes per even->odd interface k = 1..(l-1)/2.
std::vector<std::int64_t> v_per_interface(const LayeredGraph& g, const IVMatching& m);

std::int64_t explicit_edge_count(const LayeredGraph& g);

// 3DM instances with 0 <= n <= max_n and n <= m <= min(max_m, n^3),
// alternating planted and unplanted.
std::vector<TripartiteHypergraph> random_3dm_corpus(int count, std::uint64_t seed, int max_n,
                                                    int max_m);

// Layered graphs with layers in [min_layers, max_layers] (restricted to odd
// or even counts on request) and at most max_vertices vertices.
enum class Parity { kAny, kOdd, kEven };
std::vector<LayeredGraph> random_layered_corpus(int count, std::uint64_t seed, int min_layers,
                                                int max_layers, std::int64_t max_vertices,
                                                Parity parity = Parity::kAny);

}  // namespace ivm::testing
