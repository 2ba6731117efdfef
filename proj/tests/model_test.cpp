#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ivm/error.hpp"
#include "ivm/model.hpp"
#include "ivm/reduction.hpp"
#include "ivm/solver.hpp"
#include "support.hpp"

namespace ivm {
namespace {

// reduce_3dm of n = 1, edges = {(1,1,1)}: x1, y1 | {x_e, y_e} | z_e | z1.
LayeredGraph one_triple_graph() {
  return {{{1, 1}, {2}, {1}, {1}}, {{1, 1, 1}, {1, 2, 1}, {2, 1, 1}, {3, 1, 1}}};
}

IVMatching one_triple_cert() {
  return {{{{1, 1, 1}, {2, 1, 1}}, {{1, 2, 1}, {2, 1, 2}}, {{3, 1, 1}, {4, 1, 1}}}, {}};
}

std::vector<Violation> codes(const Report& r) {
  std::vector<Violation> out;
  for (const auto& v : r.violations) out.push_back(v.code);
  return out;
}

TEST_CASE("validate_graph flags two even-to-odd macroedges sharing a cluster") {
  const LayeredGraph g{{{2}, {2}, {1, 1}}, {{1, 1, 1}, {2, 1, 1}, {2, 1, 2}}};
  const auto report = validate_graph(g);
  CHECK_FALSE(report.ok());
  CHECK(codes(report) == std::vector{Violation::kMatchingViolation});
  CHECK(report.violations[0].locus.find("layer 2 cluster 1") != std::string::npos);
}

TEST_CASE("validate_graph flags the odd side of a matching violation too") {
  const LayeredGraph g{{{1}, {1, 1}, {2}}, {{1, 1, 1}, {2, 1, 1}, {2, 2, 1}}};
  const auto report = validate_graph(g);
  CHECK(codes(report) == std::vector{Violation::kMatchingViolation});
  CHECK(report.violations[0].locus.find("layer 3 cluster 1") != std::string::npos);
}

TEST_CASE("odd-to-even macroedges may share clusters") {
  const LayeredGraph g{{{1, 1}, {1, 1}}, {{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2}}};
  CHECK(validate_graph(g).ok());
}

TEST_CASE("validate_graph flags references past the cluster count") {
  const LayeredGraph g{{{1}, {1, 1}, {1}}, {{1, 1, 3}}};
  CHECK(codes(validate_graph(g)) == std::vector{Violation::kBadClusterRef});

  const LayeredGraph bad_layer{{{1}, {1}}, {{2, 1, 1}}};
  CHECK(codes(validate_graph(bad_layer)) == std::vector{Violation::kBadClusterRef});

  const LayeredGraph zero{{{1}, {1}}, {{1, 0, 1}}};
  CHECK(codes(validate_graph(zero)) == std::vector{Violation::kBadClusterRef});
}

TEST_CASE("validate_graph flags duplicates, negative sizes and size limits") {
  const LayeredGraph dup{{{1}, {1}}, {{1, 1, 1}, {1, 1, 1}}};
  CHECK(codes(validate_graph(dup)) == std::vector{Violation::kDuplicateMacroedge});

  const LayeredGraph negative{{{-1}, {1}}, {}};
  CHECK(codes(validate_graph(negative)) == std::vector{Violation::kBadClusterRef});

  LayeredGraph tall;
  tall.layers.assign(kMaxLayers + 1, {});
  CHECK(codes(validate_graph(tall)) == std::vector{Violation::kSizeLimit});

  const LayeredGraph heavy{{{kMaxVertices}, {1}}, {}};
  CHECK(codes(validate_graph(heavy)) == std::vector{Violation::kSizeLimit});
}

TEST_CASE("validate_graph orders violations by layer then cluster") {
  const LayeredGraph g{{{1}, {1, 1}, {1, 1}, {1}, {1, 1}},
                       {{4, 1, 2}, {3, 1, 1}, {4, 1, 1}, {1, 1, 9}, {2, 2, 1}, {2, 2, 2}}};
  const auto report = validate_graph(g);
  REQUIRE(report.violations.size() == 3);
  CHECK(report.violations[0].code == Violation::kBadClusterRef);
  CHECK(report.violations[1].code == Violation::kMatchingViolation);
  CHECK(report.violations[1].locus.find("layer 2 cluster 2") != std::string::npos);
  CHECK(report.violations[2].code == Violation::kMatchingViolation);
  CHECK(report.violations[2].locus.find("layer 4 cluster 1") != std::string::npos);
  CHECK(validate_graph(g).to_text() == report.to_text());
}

TEST_CASE("zero-size clusters are accepted and normalized away") {
  const LayeredGraph g{{{0, 2}, {2, 0}}, {{1, 1, 1}, {1, 2, 1}, {1, 2, 2}}};
  CHECK(validate_graph(g).ok());
  const NormalizedGraph norm = normalize(g);
  CHECK(norm.graph.layers == std::vector<std::vector<std::int64_t>>{{2}, {2}});
  CHECK(norm.graph.macroedges == std::vector<Macroedge>{{1, 1, 1}});
  CHECK(norm.cluster_origin == std::vector<std::vector<int>>{{2}, {1}});
}

TEST_CASE("verify_matching accepts the one-triple certificate") {
  const auto report = verify_matching(one_triple_graph(), one_triple_cert());
  CHECK(report.ok());
}

TEST_CASE("the one-triple certificate is unique up to swapping x_e and y_e") {
  // Oracle: exhaustive enumeration of every IV-matching of the 6-vertex graph.
  std::vector<IVMatching> all;
  for_each_iv_matching(one_triple_graph(), [&](const IVMatching& m) {
    all.push_back(m);
    return true;
  });
  REQUIRE(all.size() == 2);
  CHECK(std::find(all.begin(), all.end(), one_triple_cert()) != all.end());
  for (const auto& m : all) {
    CHECK(m.is.size() == 3);
    CHECK(m.vs.empty());
  }
}

TEST_CASE("verify_matching reports both ends of a deleted I") {
  IVMatching m = one_triple_cert();
  m.is.erase(m.is.begin());
  const auto report = verify_matching(one_triple_graph(), m);
  CHECK_FALSE(report.ok());
  CHECK(codes(report) ==
        std::vector{Violation::kUncoveredVertex, Violation::kUncoveredVertex});
  CHECK(report.violations[0].locus.rfind("(1,1,1)", 0) == 0);
  CHECK(report.violations[1].locus.rfind("(2,1,1)", 0) == 0);
}

TEST_CASE("verify_matching on the empty two-layer graph") {
  const LayeredGraph g{{{}, {}}, {}};
  CHECK(verify_matching(g, {}).ok());
}

TEST_CASE("verify_matching shape errors") {
  const LayeredGraph g = one_triple_graph();

  SUBCASE("vertex out of range") {
    IVMatching m = one_triple_cert();
    m.is[0].b.index = 3;
    const auto report = verify_matching(g, m);
    CHECK(report.has(Violation::kOutOfRangeVertex));
  }
  SUBCASE("I with endpoints on the wrong layers") {
    IVMatching m = one_triple_cert();
    m.is[2] = {{4, 1, 1}, {3, 1, 1}};
    CHECK(verify_matching(g, m).has(Violation::kBadShape));
  }
  SUBCASE("I along a missing macroedge") {
    const LayeredGraph two{{{1, 1}, {1, 1}}, {{1, 1, 1}, {1, 2, 2}}};
    const IVMatching m{{{{1, 1, 1}, {2, 2, 1}}, {{1, 2, 1}, {2, 1, 1}}}, {}};
    const auto report = verify_matching(two, m);
    CHECK(codes(report) == std::vector{Violation::kBadShape, Violation::kBadShape});
  }
  SUBCASE("V with coinciding leaves") {
    const IVMatching m{{}, {{{3, 1, 1}, {2, 1, 1}, {2, 1, 1}}}};
    const auto report = verify_matching(g, m);
    CHECK(report.has(Violation::kBadShape));
    CHECK(report.has(Violation::kDoubleCover));
  }
  SUBCASE("duplicated shape") {
    IVMatching m = one_triple_cert();
    m.is.push_back(m.is[1]);
    CHECK(codes(verify_matching(g, m)) ==
          std::vector{Violation::kDoubleCover, Violation::kDoubleCover});
  }
}

TEST_CASE("uncovered last-layer vertices are closure violations") {
  IVMatching m = one_triple_cert();
  m.is.pop_back();
  const auto report = verify_matching(one_triple_graph(), m);
  CHECK(codes(report) == std::vector{Violation::kUncoveredVertex, Violation::kClosureViolation});

  const LayeredGraph single{{{1}}, {}};
  CHECK(codes(verify_matching(single, {})) == std::vector{Violation::kClosureViolation});
}

TEST_CASE("verify_matching rejects an invalid graph") {
  const LayeredGraph g{{{1}, {1}}, {{1, 1, 2}}};
  CHECK_THROWS_AS(verify_matching(g, {}), Error);
}

TEST_CASE("interface_v_totals") {
  SUBCASE("reduction sizes give m - n") {
    for (int n = 0; n <= 4; ++n) {
      for (int m = n; m <= n + 5; ++m) {
        const LayeredGraph g{{std::vector<std::int64_t>(2 * n, 1),
                              std::vector<std::int64_t>(m, 2),
                              std::vector<std::int64_t>(m, 1),
                              std::vector<std::int64_t>(n, 1)},
                             {}};
        const auto totals = interface_v_totals(g);
        REQUIRE(totals.has_value());
        CHECK(*totals == std::vector<std::int64_t>{m - n});
      }
    }
  }
  SUBCASE("half a V is infeasible") {
    const LayeredGraph g{{{1}, {2}}, {{1, 1, 1}}};
    CHECK_FALSE(interface_v_totals(g).has_value());
  }
  SUBCASE("sizes (2 | 4 | 2 | 1)") {
    const LayeredGraph g{{{2}, {4}, {2}, {1}}, {{1, 1, 1}, {2, 1, 1}, {3, 1, 1}}};
    const auto totals = interface_v_totals(g);
    REQUIRE(totals.has_value());
    CHECK(*totals == std::vector<std::int64_t>{1});
    // Oracle: every enumerated IV-matching uses exactly one V.
    std::int64_t seen = 0;
    for_each_iv_matching(g, [&](const IVMatching& m) {
      ++seen;
      CHECK(m.vs.size() == 1);
      return true;
    });
    CHECK(seen > 0);
  }
  SUBCASE("odd closure and tiny layer counts") {
    CHECK(interface_v_totals(LayeredGraph{{{2}, {2}, {1}}, {}}) == std::nullopt);
    CHECK(interface_v_totals(LayeredGraph{{{2}, {4}, {1}}, {}}) ==
          std::vector<std::int64_t>{1});
    CHECK(interface_v_totals(LayeredGraph{}) == std::vector<std::int64_t>{});
    CHECK(interface_v_totals(LayeredGraph{{{}}, {}}) == std::vector<std::int64_t>{});
    CHECK_FALSE(interface_v_totals(LayeredGraph{{{1}}, {}}).has_value());
  }
}

TEST_CASE("every enumerated certificate uses exactly the forced V totals") {
  const auto corpus = testing::random_layered_corpus(150, 0x1234, 2, 6, 12);
  int feasible = 0;
  for (const auto& g : corpus) {
    const auto totals = interface_v_totals(g);
    for_each_iv_matching(g, [&](const IVMatching& m) {
      REQUIRE(totals.has_value());
      CHECK(testing::v_per_interface(g, m) == *totals);
      return true;
    });
    if (brute_force_iv(g).feasible()) ++feasible;
  }
  CHECK(feasible > 20);
}

TEST_CASE("expand_vertices") {
  SUBCASE("one macroedge between sizes 2 and 3") {
    const LayeredGraph g{{{2}, {3}}, {{1, 1, 1}}};
    const auto x = expand_vertices(g);
    CHECK(x.vertices.size() == 5);
    CHECK(x.edges.size() == 6);
    CHECK(std::is_sorted(x.vertices.begin(), x.vertices.end()));
  }
  SUBCASE("no macroedges") {
    const LayeredGraph g{{{2}, {3}}, {}};
    const auto x = expand_vertices(g);
    CHECK(x.edges.empty());
    for (const auto& adj : x.adjacency) CHECK(adj.empty());
  }
  SUBCASE("one-triple reduction") {
    const LayeredGraph g = one_triple_graph();
    CHECK(testing::explicit_edge_count(g) == 1 * 2 + 1 * 2 + 2 * 1 + 1 * 1);
    CHECK(expand_vertices(g).edges.size() == 7);
  }
  SUBCASE("edge cap") {
    const LayeredGraph g{{{10}, {10}}, {{1, 1, 1}}};
    CHECK(expand_vertices(g, 100).edges.size() == 100);
    CHECK_THROWS_AS(expand_vertices(g, 99), Error);
  }
}

TEST_CASE("permuting indices inside clusters keeps a certificate valid") {
  const auto corpus = testing::random_layered_corpus(80, 77, 2, 6, 14);
  std::mt19937 rng(5);
  int checked = 0;
  for (const auto& g : corpus) {
    const auto result = brute_force_iv(g);
    if (!result.feasible()) continue;
    std::vector<std::vector<std::vector<int>>> perm(g.layers.size());
    for (int k = 1; k <= g.layer_count(); ++k) {
      for (int j = 1; j <= g.cluster_count(k); ++j) {
        std::vector<int> p(g.cluster_size(k, j));
        std::iota(p.begin(), p.end(), 1);
        std::shuffle(p.begin(), p.end(), rng);
        perm[k - 1].push_back(std::move(p));
      }
    }
    auto move = [&](VertexRef& v) { v.index = perm[v.layer - 1][v.cluster - 1][v.index - 1]; };
    IVMatching m = result.certificate;
    for (auto& s : m.is) {
      move(s.a);
      move(s.b);
    }
    for (auto& s : m.vs) {
      move(s.center);
      move(s.left);
      move(s.right);
    }
    CHECK(verify_matching(g, m).ok());
    ++checked;
  }
  CHECK(checked > 10);
}

}  // namespace
}  // namespace ivm
