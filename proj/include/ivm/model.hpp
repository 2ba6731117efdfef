#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ivm {

inline constexpr int kMaxLayers = 64;
inline constexpr std::int64_t kMaxVertices = 1'000'000;
inline constexpr std::int64_t kDefaultExpansionCap = 10'000'000;

// A vertex of a layered graph. All three coordinates are 1-based.
struct VertexRef {
  int layer = 0;
  int cluster = 0;
  int index = 0;

  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

std::string to_string(const VertexRef& v);

// Connects cluster `from` of `layer` to cluster `to` of `layer + 1`.
struct Macroedge {
  int layer = 0;
  int from = 0;
  int to = 0;

  friend auto operator<=>(const Macroedge&, const Macroedge&) = default;
};

// Instance described at cluster granularity. layers[k-1][j-1] is the size of
// cluster j in layer k.
struct LayeredGraph {
  std::vector<std::vector<std::int64_t>> layers;
  std::vector<Macroedge> macroedges;

  int layer_count() const { return static_cast<int>(layers.size()); }
  int cluster_count(int layer) const {
    return static_cast<int>(layers[layer - 1].size());
  }
  std::int64_t cluster_size(int layer, int cluster) const {
    return layers[layer - 1][cluster - 1];
  }
  std::int64_t layer_size(int layer) const;
  std::int64_t vertex_count() const;
  bool contains(const VertexRef& v) const;
  bool has_macroedge(int layer, int from, int to) const;

  friend bool operator==(const LayeredGraph&, const LayeredGraph&) = default;
};

// Same graph with macroedges sorted; duplicates are kept.
LayeredGraph canonical(LayeredGraph g);

// I-shape: `a` sits on an odd layer, `b` on the even layer right above it.
struct ShapeI {
  VertexRef a;
  VertexRef b;

  friend auto operator<=>(const ShapeI&, const ShapeI&) = default;
};

// V-shape: `center` on an odd layer, two distinct leaves in one cluster of
// the even layer right below it.
struct ShapeV {
  VertexRef center;
  VertexRef left;
  VertexRef right;

  friend auto operator<=>(const ShapeV&, const ShapeV&) = default;
};

struct IVMatching {
  std::vector<ShapeI> is;
  std::vector<ShapeV> vs;

  std::size_t shape_count() const { return is.size() + vs.size(); }

  friend bool operator==(const IVMatching&, const IVMatching&) = default;
};

// Sorted shapes, V leaves ordered left < right.
IVMatching canonical(IVMatching m);

enum class Violation {
  kMatchingViolation,
  kBadClusterRef,
  kUncoveredVertex,
  kDoubleCover,
  kBadShape,
  kOutOfRangeVertex,
  kClosureViolation,
  kDuplicateMacroedge,
  kSizeLimit,
};

std::string_view to_string(Violation code);

struct ViolationEntry {
  Violation code;
  std::string locus;

  friend bool operator==(const ViolationEntry&, const ViolationEntry&) = default;
};

struct Report {
  std::vector<ViolationEntry> violations;

  bool ok() const { return violations.empty(); }
  bool has(Violation code) const;
  // One "CODE locus" line per violation.
  std::string to_text() const;
};

using ValidationReport = Report;
using VerifyReport = Report;

ValidationReport validate_graph(const LayeredGraph& g);

// Throws Error(kValidationError) when the graph itself is invalid.
VerifyReport verify_matching(const LayeredGraph& g, const IVMatching& m);

// Forced number of V-shapes at each even->odd interface k = 1..(l-1)/2, or
// nullopt when layer cardinalities alone rule out any IV-matching.
std::optional<std::vector<std::int64_t>> interface_v_totals(const LayeredGraph& g);

struct ExplicitGraph {
  std::vector<VertexRef> vertices;  // lexicographic
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (lower, upper) positions, sorted
  std::vector<std::vector<std::size_t>> adjacency;          // sorted neighbour positions

  std::size_t position(const VertexRef& v) const;
};

// Complete bipartite expansion of every macroedge. Throws Error(kSizeLimit)
// when more than `edge_cap` explicit edges would be produced.
ExplicitGraph expand_vertices(const LayeredGraph& g,
                              std::int64_t edge_cap = kDefaultExpansionCap);

// Zero-size clusters removed together with their macroedges.
// cluster_origin[k-1][j-1] is the original index of normalized cluster j.
struct NormalizedGraph {
  LayeredGraph graph;
  std::vector<std::vector<int>> cluster_origin;
};

NormalizedGraph normalize(const LayeredGraph& g);

}  // namespace ivm
