#pragma once

#include <compare>
#include <optional>
#include <vector>

namespace ivm {

inline constexpr int kMaxOracleN = 10;
inline constexpr int kMaxOracleM = 40;

// Hyperedge (x, y, z), each coordinate a 1-based index into its partite.
struct Triple {
  int x = 0;
  int y = 0;
  int z = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Three-dimensional matching instance: partites X, Y, Z of size n each.
struct TripartiteHypergraph {
  int n = 0;
  std::vector<Triple> edges;

  int m() const { return static_cast<int>(edges.size()); }

  friend bool operator==(const TripartiteHypergraph&, const TripartiteHypergraph&) = default;
};

// Chosen hyperedges, kept sorted.
struct PerfectMatching3DM {
  std::vector<Triple> chosen;

  friend bool operator==(const PerfectMatching3DM&, const PerfectMatching3DM&) = default;
};

// Throws Error(kValidationError) on an out-of-range coordinate, a duplicate
// triple, or a negative n.
void check_hypergraph(const TripartiteHypergraph& h);

// Exhaustive search: covers x = 1..n in order and tries triples in input
// order. Throws Error(kSizeLimit) past n = 10 or m = 40.
std::optional<PerfectMatching3DM> brute_force_3dm(const TripartiteHypergraph& h);

bool verify_3dm_matching(const TripartiteHypergraph& h, const std::vector<Triple>& chosen);

}  // namespace ivm
