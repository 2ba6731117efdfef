#include "ivm/model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "ivm/error.hpp"

namespace ivm {

std::string to_string(const VertexRef& v) {
  std::ostringstream os;
  os << '(' << v.layer << ',' << v.cluster << ',' << v.index << ')';
  return os.str();
}

std::int64_t LayeredGraph::layer_size(int layer) const {
  const auto& sizes = layers[layer - 1];
  return std::accumulate(sizes.begin(), sizes.end(), std::int64_t{0});
}

std::int64_t LayeredGraph::vertex_count() const {
  std::int64_t total = 0;
  for (const auto& sizes : layers) {
    for (auto s : sizes) total += std::max<std::int64_t>(s, 0);
  }
  return total;
}

bool LayeredGraph::contains(const VertexRef& v) const {
  if (v.layer < 1 || v.layer > layer_count()) return false;
  if (v.cluster < 1 || v.cluster > cluster_count(v.layer)) return false;
  return v.index >= 1 && v.index <= cluster_size(v.layer, v.cluster);
}

bool LayeredGraph::has_macroedge(int layer, int from, int to) const {
  const Macroedge key{layer, from, to};
  return std::find(macroedges.begin(), macroedges.end(), key) != macroedges.end();
}

LayeredGraph canonical(LayeredGraph g) {
  std::sort(g.macroedges.begin(), g.macroedges.end());
  return g;
}

IVMatching canonical(IVMatching m) {
  for (auto& v : m.vs) {
    if (v.right < v.left) std::swap(v.left, v.right);
  }
  std::sort(m.is.begin(), m.is.end());
  std::sort(m.vs.begin(), m.vs.end());
  return m;
}

std::string_view to_string(Violation code) {
  switch (code) {
    case Violation::kMatchingViolation: return "MATCHING_VIOLATION";
    case Violation::kBadClusterRef: return "BAD_CLUSTER_REF";
    case Violation::kUncoveredVertex: return "UNCOVERED_VERTEX";
    case Violation::kDoubleCover: return "DOUBLE_COVER";
    case Violation::kBadShape: return "BAD_SHAPE";
    case Violation::kOutOfRangeVertex: return "OUT_OF_RANGE_VERTEX";
    case Violation::kClosureViolation: return "CLOSURE_VIOLATION";
    case Violation::kDuplicateMacroedge: return "DUPLICATE_MACROEDGE";
    case Violation::kSizeLimit: return "SIZE_LIMIT";
  }
  return "UNKNOWN";
}

bool Report::has(Violation code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [code](const ViolationEntry& e) { return e.code == code; });
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& v : violations) {
    out += to_string(v.code);
    out += ' ';
    out += v.locus;
    out += '\n';
  }
  return out;
}

namespace {

std::string cluster_locus(int layer, int cluster) {
  return "layer " + std::to_string(layer) + " cluster " + std::to_string(cluster);
}

std::string macro_locus(const Macroedge& e) {
  return "macro " + std::to_string(e.layer) + ' ' + std::to_string(e.from) + ' ' +
         std::to_string(e.to);
}

// Flat numbering of the vertices of a graph whose clusters are in range.
class VertexNumbering {
 public:
  explicit VertexNumbering(const LayeredGraph& g) : base_(g.layers.size()) {
    std::size_t next = 0;
    for (std::size_t k = 0; k < g.layers.size(); ++k) {
      for (auto size : g.layers[k]) {
        base_[k].push_back(next);
        next += static_cast<std::size_t>(std::max<std::int64_t>(size, 0));
      }
    }
    total_ = next;
  }

  std::size_t operator()(const VertexRef& v) const {
    return base_[v.layer - 1][v.cluster - 1] + static_cast<std::size_t>(v.index - 1);
  }
  std::size_t total() const { return total_; }
  const std::vector<std::vector<std::size_t>>& bases() const { return base_; }

 private:
  std::vector<std::vector<std::size_t>> base_;
  std::size_t total_ = 0;
};

}  // namespace

ValidationReport validate_graph(const LayeredGraph& g) {
  // (layer, cluster, secondary, entry) so the final order is by locus.
  using Keyed = std::tuple<int, int, int, int, ViolationEntry>;
  std::vector<Keyed> found;
  auto add = [&found](int layer, int cluster, int secondary, Violation code,
                      std::string locus) {
    found.emplace_back(layer, cluster, secondary, static_cast<int>(code),
                       ViolationEntry{code, std::move(locus)});
  };

  const int ell = g.layer_count();
  if (ell > kMaxLayers) {
    add(0, 0, 0, Violation::kSizeLimit,
        "graph: " + std::to_string(ell) + " layers exceed " + std::to_string(kMaxLayers));
  }
  for (int k = 1; k <= ell; ++k) {
    for (int j = 1; j <= g.cluster_count(k); ++j) {
      if (g.cluster_size(k, j) < 0) {
        add(k, j, 0, Violation::kBadClusterRef, cluster_locus(k, j) + ": negative size");
      }
    }
  }
  if (g.vertex_count() > kMaxVertices) {
    add(0, 0, 0, Violation::kSizeLimit,
        "graph: " + std::to_string(g.vertex_count()) + " vertices exceed " +
            std::to_string(kMaxVertices));
  }

  auto in_range = [&g, ell](const Macroedge& e) {
    return e.layer >= 1 && e.layer < ell && e.from >= 1 &&
           e.from <= g.cluster_count(e.layer) && e.to >= 1 &&
           e.to <= g.cluster_count(e.layer + 1);
  };

  std::vector<Macroedge> sorted = g.macroedges;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Macroedge> distinct;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& e = sorted[i];
    if (!in_range(e)) {
      add(e.layer, e.from, e.to, Violation::kBadClusterRef,
          macro_locus(e) + ": no such layer or cluster");
      continue;
    }
    if (i > 0 && sorted[i - 1] == e) {
      add(e.layer, e.from, e.to, Violation::kDuplicateMacroedge, macro_locus(e));
      continue;
    }
    distinct.push_back(e);
  }

  // Even -> odd macroedges must form a matching on clusters.
  for (int k = 2; k < ell; k += 2) {
    std::vector<int> lower(g.cluster_count(k) + 1, 0);
    std::vector<int> upper(g.cluster_count(k + 1) + 1, 0);
    for (const auto& e : distinct) {
      if (e.layer != k) continue;
      ++lower[e.from];
      ++upper[e.to];
    }
    for (int j = 1; j < static_cast<int>(lower.size()); ++j) {
      if (lower[j] > 1) {
        add(k, j, 0, Violation::kMatchingViolation,
            cluster_locus(k, j) + ": " + std::to_string(lower[j]) + " up-macroedges");
      }
    }
    for (int j = 1; j < static_cast<int>(upper.size()); ++j) {
      if (upper[j] > 1) {
        add(k + 1, j, 0, Violation::kMatchingViolation,
            cluster_locus(k + 1, j) + ": " + std::to_string(upper[j]) +
                " down-macroedges");
      }
    }
  }

  std::stable_sort(found.begin(), found.end(), [](const Keyed& x, const Keyed& y) {
    return std::tie(std::get<0>(x), std::get<1>(x), std::get<2>(x), std::get<3>(x)) <
           std::tie(std::get<0>(y), std::get<1>(y), std::get<2>(y), std::get<3>(y));
  });
  ValidationReport report;
  for (auto& k : found) report.violations.push_back(std::move(std::get<4>(k)));
  return report;
}

VerifyReport verify_matching(const LayeredGraph& g, const IVMatching& m) {
  if (!validate_graph(g).ok()) {
    throw Error(ErrorCode::kValidationError, "graph fails validation");
  }
  std::vector<Macroedge> macro = g.macroedges;
  std::sort(macro.begin(), macro.end());
  auto joined = [&macro](int layer, int from, int to) {
    return std::binary_search(macro.begin(), macro.end(), Macroedge{layer, from, to});
  };

  const VertexNumbering number(g);
  std::vector<int> cover(number.total(), 0);
  VerifyReport report;
  auto fail = [&report](Violation code, std::string locus) {
    report.violations.push_back({code, std::move(locus)});
  };

  for (std::size_t s = 0; s < m.is.size(); ++s) {
    const auto& shape = m.is[s];
    const std::string locus =
        "I#" + std::to_string(s + 1) + ' ' + to_string(shape.a) + '-' + to_string(shape.b);
    bool in_range = true;
    for (const auto& v : {shape.a, shape.b}) {
      if (g.contains(v)) {
        ++cover[number(v)];
      } else {
        in_range = false;
        fail(Violation::kOutOfRangeVertex, locus + ": " + to_string(v) + " does not exist");
      }
    }
    if (!in_range) continue;
    if (shape.a.layer % 2 != 1 || shape.b.layer != shape.a.layer + 1) {
      fail(Violation::kBadShape, locus + ": endpoints must lie on layers 2k-1 and 2k");
    } else if (!joined(shape.a.layer, shape.a.cluster, shape.b.cluster)) {
      fail(Violation::kBadShape, locus + ": no macroedge between the clusters");
    }
  }

  for (std::size_t s = 0; s < m.vs.size(); ++s) {
    const auto& shape = m.vs[s];
    const std::string locus = "V#" + std::to_string(s + 1) + ' ' + to_string(shape.center) +
                              '<' + to_string(shape.left) + ',' + to_string(shape.right) + '>';
    bool in_range = true;
    for (const auto& v : {shape.center, shape.left, shape.right}) {
      if (g.contains(v)) {
        ++cover[number(v)];
      } else {
        in_range = false;
        fail(Violation::kOutOfRangeVertex, locus + ": " + to_string(v) + " does not exist");
      }
    }
    if (!in_range) continue;
    if (shape.center.layer % 2 != 1 || shape.left.layer != shape.center.layer - 1 ||
        shape.right.layer != shape.center.layer - 1) {
      fail(Violation::kBadShape, locus + ": center must lie on layer 2k+1, leaves on 2k");
    } else if (shape.left == shape.right) {
      fail(Violation::kBadShape, locus + ": leaves coincide");
    } else if (shape.left.cluster != shape.right.cluster) {
      fail(Violation::kBadShape, locus + ": leaves in different clusters");
    } else if (!joined(shape.left.layer, shape.left.cluster, shape.center.cluster)) {
      fail(Violation::kBadShape, locus + ": no macroedge between the clusters");
    }
  }

  const int ell = g.layer_count();
  for (int k = 1; k <= ell; ++k) {
    for (int j = 1; j <= g.cluster_count(k); ++j) {
      for (int i = 1; i <= g.cluster_size(k, j); ++i) {
        const VertexRef v{k, j, i};
        const int c = cover[number(v)];
        if (c > 1) {
          fail(Violation::kDoubleCover,
               to_string(v) + ": in " + std::to_string(c) + " shapes");
        } else if (c == 0) {
          fail(k == ell ? Violation::kClosureViolation : Violation::kUncoveredVertex,
               to_string(v) + ": uncovered");
        }
      }
    }
  }
  return report;
}

std::optional<std::vector<std::int64_t>> interface_v_totals(const LayeredGraph& g) {
  const int ell = g.layer_count();
  std::vector<std::int64_t> totals;
  std::int64_t previous = 0;
  for (int k = 1; 2 * k <= ell; ++k) {
    const std::int64_t i_count = g.layer_size(2 * k - 1) - previous;
    if (i_count < 0) return std::nullopt;
    const std::int64_t rest = g.layer_size(2 * k) - i_count;
    if (rest < 0 || rest % 2 != 0) return std::nullopt;
    const std::int64_t t = rest / 2;
    if (2 * k + 1 <= ell) {
      totals.push_back(t);
    } else if (t != 0) {
      return std::nullopt;
    }
    previous = t;
  }
  if (ell % 2 == 1 && previous != g.layer_size(ell)) return std::nullopt;
  return totals;
}

std::size_t ExplicitGraph::position(const VertexRef& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) {
    throw Error(ErrorCode::kInvalidArgument, "vertex " + to_string(v) + " not in graph");
  }
  return static_cast<std::size_t>(it - vertices.begin());
}

ExplicitGraph expand_vertices(const LayeredGraph& g, std::int64_t edge_cap) {
  std::vector<Macroedge> macro = g.macroedges;
  std::sort(macro.begin(), macro.end());
  macro.erase(std::unique(macro.begin(), macro.end()), macro.end());

  std::int64_t edge_count = 0;
  for (const auto& e : macro) {
    edge_count += g.cluster_size(e.layer, e.from) * g.cluster_size(e.layer + 1, e.to);
    if (edge_count > edge_cap) {
      throw Error(ErrorCode::kSizeLimit,
                  "expansion exceeds " + std::to_string(edge_cap) + " edges");
    }
  }

  ExplicitGraph out;
  const VertexNumbering number(g);
  out.vertices.reserve(number.total());
  for (int k = 1; k <= g.layer_count(); ++k) {
    for (int j = 1; j <= g.cluster_count(k); ++j) {
      for (int i = 1; i <= g.cluster_size(k, j); ++i) out.vertices.push_back({k, j, i});
    }
  }
  out.adjacency.resize(out.vertices.size());
  out.edges.reserve(static_cast<std::size_t>(edge_count));
  for (const auto& e : macro) {
    for (int i = 1; i <= g.cluster_size(e.layer, e.from); ++i) {
      for (int j = 1; j <= g.cluster_size(e.layer + 1, e.to); ++j) {
        const auto lo = number({e.layer, e.from, i});
        const auto hi = number({e.layer + 1, e.to, j});
        out.edges.emplace_back(lo, hi);
        out.adjacency[lo].push_back(hi);
        out.adjacency[hi].push_back(lo);
      }
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  for (auto& adj : out.adjacency) std::sort(adj.begin(), adj.end());
  return out;
}

NormalizedGraph normalize(const LayeredGraph& g) {
  NormalizedGraph out;
  std::vector<std::vector<int>> renumber(g.layers.size());
  out.graph.layers.resize(g.layers.size());
  out.cluster_origin.resize(g.layers.size());
  for (std::size_t k = 0; k < g.layers.size(); ++k) {
    renumber[k].assign(g.layers[k].size() + 1, 0);
    for (std::size_t j = 0; j < g.layers[k].size(); ++j) {
      if (g.layers[k][j] <= 0) continue;
      out.graph.layers[k].push_back(g.layers[k][j]);
      out.cluster_origin[k].push_back(static_cast<int>(j + 1));
      renumber[k][j + 1] = static_cast<int>(out.cluster_origin[k].size());
    }
  }
  for (const auto& e : g.macroedges) {
    if (e.layer < 1 || e.layer >= g.layer_count()) continue;
    const auto& lo = renumber[e.layer - 1];
    const auto& hi = renumber[e.layer];
    if (e.from < 1 || e.from >= static_cast<int>(lo.size())) continue;
    if (e.to < 1 || e.to >= static_cast<int>(hi.size())) continue;
    if (lo[e.from] == 0 || hi[e.to] == 0) continue;
    out.graph.macroedges.push_back({e.layer, lo[e.from], hi[e.to]});
  }
  std::sort(out.graph.macroedges.begin(), out.graph.macroedges.end());
  out.graph.macroedges.erase(
      std::unique(out.graph.macroedges.begin(), out.graph.macroedges.end()),
      out.graph.macroedges.end());
  return out;
}

}  // namespace ivm
