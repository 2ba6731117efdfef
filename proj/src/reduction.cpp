#include "ivm/reduction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "ivm/error.hpp"

namespace ivm {

ReductionMap canonical_reduction_map(const TripartiteHypergraph& h) {
  ReductionMap map;
  map.n = h.n;
  map.m = h.m();
  for (int i = 1; i <= h.n; ++i) {
    map.x_cluster.push_back(i);
    map.y_cluster.push_back(h.n + i);
    map.z_cluster.push_back(i);
  }
  for (int e = 1; e <= h.m(); ++e) {
    map.pair_cluster.push_back(e);
    map.center_cluster.push_back(e);
  }
  return map;
}

namespace {

void check_bijection(const std::vector<int>& a, const std::vector<int>& b, int count,
                     const char* what) {
  std::vector<char> hit(count + 1, 0);
  for (const auto* part : {&a, &b}) {
    for (int c : *part) {
      if (c < 1 || c > count || hit[c]) {
        throw Error(ErrorCode::kInvalidArgument,
                    std::string("reduction map: bad ") + what + " cluster " + std::to_string(c));
      }
      hit[c] = 1;
    }
  }
  if (static_cast<int>(a.size() + b.size()) != count) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("reduction map: wrong number of ") + what + " clusters");
  }
}

void check_map(const TripartiteHypergraph& h, const ReductionMap& map) {
  if (map.n != h.n || map.m != h.m()) {
    throw Error(ErrorCode::kInvalidArgument, "reduction map sized for a different instance");
  }
  if (static_cast<int>(map.x_cluster.size()) != h.n ||
      static_cast<int>(map.y_cluster.size()) != h.n) {
    throw Error(ErrorCode::kInvalidArgument, "reduction map: X/Y entry count");
  }
  check_bijection(map.x_cluster, map.y_cluster, 2 * h.n, "layer-1");
  check_bijection(map.z_cluster, {}, h.n, "layer-4");
  check_bijection(map.pair_cluster, {}, h.m(), "layer-2");
  check_bijection(map.center_cluster, {}, h.m(), "layer-3");
}

}  // namespace

LayeredGraph build_reduced_graph(const TripartiteHypergraph& h, const ReductionMap& map) {
  check_hypergraph(h);
  check_map(h, map);
  LayeredGraph g;
  g.layers = {std::vector<std::int64_t>(2 * h.n, 1), std::vector<std::int64_t>(h.m(), 2),
              std::vector<std::int64_t>(h.m(), 1), std::vector<std::int64_t>(h.n, 1)};
  for (int e = 0; e < h.m(); ++e) {
    const auto& t = h.edges[e];
    const int pair = map.pair_cluster[e];
    const int center = map.center_cluster[e];
    g.macroedges.push_back({1, map.x_cluster[t.x - 1], pair});
    g.macroedges.push_back({1, map.y_cluster[t.y - 1], pair});
    g.macroedges.push_back({2, pair, center});
    g.macroedges.push_back({3, center, map.z_cluster[t.z - 1]});
  }
  return canonical(std::move(g));
}

Reduction reduce_3dm(const TripartiteHypergraph& h) {
  ReductionMap map = canonical_reduction_map(h);
  LayeredGraph g = build_reduced_graph(h, map);
  return {std::move(g), std::move(map)};
}

PerfectMatching3DM lift_to_3dm(const TripartiteHypergraph& h, const ReductionMap& map,
                               const IVMatching& cert) {
  const LayeredGraph g = build_reduced_graph(h, map);
  const VerifyReport report = verify_matching(g, cert);
  if (!report.ok()) {
    throw Error(ErrorCode::kInvalidCert, report.violations.front().locus);
  }

  // Shape covering each vertex: I-shapes get ids 0.., V-shapes -1, -2, ...
  std::map<VertexRef, long> owner;
  for (std::size_t s = 0; s < cert.is.size(); ++s) {
    owner[cert.is[s].a] = static_cast<long>(s);
    owner[cert.is[s].b] = static_cast<long>(s);
  }
  for (std::size_t s = 0; s < cert.vs.size(); ++s) {
    const long id = -static_cast<long>(s) - 1;
    owner[cert.vs[s].center] = id;
    owner[cert.vs[s].left] = id;
    owner[cert.vs[s].right] = id;
  }

  PerfectMatching3DM result;
  for (int e = 0; e < h.m(); ++e) {
    const long xe = owner.at({2, map.pair_cluster[e], 1});
    const long ye = owner.at({2, map.pair_cluster[e], 2});
    const long ze = owner.at({3, map.center_cluster[e], 1});
    const bool all_i = xe >= 0 && ye >= 0 && ze >= 0;
    const bool one_v = xe < 0 && xe == ye && ye == ze;
    if (!all_i && !one_v) {
      throw Error(ErrorCode::kInvalidCert,
                  "gadget of hyperedge " + std::to_string(e + 1) + " is split");
    }
    if (all_i) result.chosen.push_back(h.edges[e]);
  }
  std::sort(result.chosen.begin(), result.chosen.end());
  if (!verify_3dm_matching(h, result.chosen) ||
      static_cast<int>(cert.vs.size()) != h.m() - h.n) {
    throw std::logic_error("lifted set is not a perfect matching");
  }
  return result;
}

IVMatching embed_from_3dm(const TripartiteHypergraph& h, const ReductionMap& map,
                          const PerfectMatching3DM& matching) {
  check_hypergraph(h);
  check_map(h, map);
  if (!verify_3dm_matching(h, matching.chosen)) {
    throw Error(ErrorCode::kInvalidMatching, "not a perfect matching of the instance");
  }
  IVMatching cert;
  for (int e = 0; e < h.m(); ++e) {
    const auto& t = h.edges[e];
    const VertexRef xe{2, map.pair_cluster[e], 1};
    const VertexRef ye{2, map.pair_cluster[e], 2};
    const VertexRef ze{3, map.center_cluster[e], 1};
    const bool chosen =
        std::find(matching.chosen.begin(), matching.chosen.end(), t) != matching.chosen.end();
    if (chosen) {
      cert.is.push_back({{1, map.x_cluster[t.x - 1], 1}, xe});
      cert.is.push_back({{1, map.y_cluster[t.y - 1], 1}, ye});
      cert.is.push_back({ze, {4, map.z_cluster[t.z - 1], 1}});
    } else {
      cert.vs.push_back({ze, xe, ye});
    }
  }
  return canonical(std::move(cert));
}

}  // namespace ivm
