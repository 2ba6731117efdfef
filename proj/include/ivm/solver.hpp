#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ivm/model.hpp"

namespace ivm {

inline constexpr std::int64_t kDefaultSolverCap = 10'000;
inline constexpr std::int64_t kMaxBruteForceVertices = 16;

enum class Status { kFeasible, kInfeasible };

enum class InfeasibleReason { kNone, kCounts, kCapacity, kSearchExhausted };

std::string_view to_string(Status status);
std::string_view to_string(InfeasibleReason reason);

struct SolveStats {
  std::int64_t nodes = 0;
  std::int64_t flow_calls = 0;
};

struct SolveResult {
  Status status = Status::kInfeasible;
  InfeasibleReason reason = InfeasibleReason::kNone;
  IVMatching certificate;  // canonical; empty unless feasible
  SolveStats stats;

  bool feasible() const { return status == Status::kFeasible; }
};

// Macroedges grouped the way the counts formulation needs them. Layer pair p
// joins odd layer 2p-1 to even layer 2p (the even side is empty when 2p > l);
// interface k joins even layer 2k to odd layer 2k+1. Both sorted.
struct CountsLayout {
  std::vector<std::vector<Macroedge>> layer_pairs;
  std::vector<std::vector<Macroedge>> interfaces;
};

CountsLayout counts_layout(const LayeredGraph& g);

// Shape counts per cluster-level macroedge, aligned with a CountsLayout:
// v[k-1][e] V-shapes on interfaces[k-1][e], i[p-1][e] I-shapes on
// layer_pairs[p-1][e].
struct CountsFormulation {
  std::vector<std::vector<std::int64_t>> v;
  std::vector<std::vector<std::int64_t>> i;
};

// True iff the counts are non-negative and cover every cluster exactly.
bool satisfies_counts(const LayeredGraph& g, const CountsFormulation& counts);

// Depth-first search over V placements with the given interface totals.
// Interfaces in increasing k, pairs in layout order, values descending; each
// completed interface is pruned by a transportation check on the layer pair
// below it. Returns the first full assignment together with its I flows.
std::optional<CountsFormulation> branch_v_distribution(const LayeredGraph& g,
                                                       std::span<const std::int64_t> totals,
                                                       SolveStats* stats = nullptr);

// Lowest-index-first realization of the counts as explicit shapes.
IVMatching reconstruct_certificate(const LayeredGraph& g, const CountsFormulation& counts);

// Exact decision with a canonical certificate. Throws Error(kValidationError)
// on an invalid graph and Error(kSizeLimit) above `vertex_cap` vertices.
SolveResult solve(const LayeredGraph& g, std::int64_t vertex_cap = kDefaultSolverCap);

// l = 2: one transportation problem, certificate made of I-shapes only.
SolveResult solve_two_layers(const LayeredGraph& g);

// V-shapes forced onto the last odd layer: `count` centers in cluster
// `odd_cluster`, leaves in `even_cluster` of the layer below.
struct ForcedV {
  int even_cluster = 0;
  int odd_cluster = 0;
  std::int64_t count = 0;
};

struct OddReduction {
  LayeredGraph graph;
  std::vector<ForcedV> forced;
};

// Drops the last layer of an odd-l graph, shrinking the matched even
// clusters by the forced leaves. nullopt when the last layer cannot be
// covered. Throws Error(kInvalidArgument) unless l is odd and >= 3.
std::optional<OddReduction> preprocess_odd(const LayeredGraph& g);

// Exhaustive oracle over explicit vertices; at most 16 vertices.
SolveResult brute_force_iv(const LayeredGraph& g);

// Calls `visit` once per IV-matching of g (each as a canonical certificate)
// until it returns false. Returns the number of matchings visited.
std::int64_t for_each_iv_matching(const LayeredGraph& g,
                                  const std::function<bool(const IVMatching&)>& visit);

}  // namespace ivm
