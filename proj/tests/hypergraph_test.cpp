#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "ivm/error.hpp"
#include "ivm/hypergraph.hpp"
#include "support.hpp"

namespace ivm {
namespace {

// Every subset of the edges that is a perfect matching, by bitmask.
std::vector<std::vector<Triple>> all_perfect_matchings(const TripartiteHypergraph& h) {
  std::vector<std::vector<Triple>> found;
  for (std::uint32_t mask = 0; mask < (1u << h.m()); ++mask) {
    if (std::popcount(mask) != h.n) continue;
    std::vector<Triple> pick;
    for (int e = 0; e < h.m(); ++e) {
      if (mask & (1u << e)) pick.push_back(h.edges[e]);
    }
    std::vector<int> x(h.n + 1), y(h.n + 1), z(h.n + 1);
    bool ok = true;
    for (const auto& t : pick) ok = ok && ++x[t.x] == 1 && ++y[t.y] == 1 && ++z[t.z] == 1;
    if (ok) {
      std::sort(pick.begin(), pick.end());
      found.push_back(pick);
    }
  }
  return found;
}

TEST_CASE("brute_force_3dm examples") {
  const TripartiteHypergraph one{1, {{1, 1, 1}}};
  REQUIRE(brute_force_3dm(one).has_value());
  CHECK(brute_force_3dm(one)->chosen == std::vector<Triple>{{1, 1, 1}});

  const TripartiteHypergraph uncoverable{2, {{1, 1, 1}, {1, 2, 2}}};
  CHECK_FALSE(brute_force_3dm(uncoverable).has_value());

  const TripartiteHypergraph example_b{2, {{1, 1, 1}, {2, 2, 2}, {1, 2, 1}}};
  const auto subsets = all_perfect_matchings(example_b);
  REQUIRE(subsets.size() == 1);
  REQUIRE(brute_force_3dm(example_b).has_value());
  CHECK(brute_force_3dm(example_b)->chosen == subsets.front());
  CHECK(subsets.front() == std::vector<Triple>{{1, 1, 1}, {2, 2, 2}});

  const TripartiteHypergraph empty{0, {}};
  REQUIRE(brute_force_3dm(empty).has_value());
  CHECK(brute_force_3dm(empty)->chosen.empty());
}

TEST_CASE("brute_force_3dm size limits") {
  TripartiteHypergraph big{11, {}};
  CHECK_THROWS_AS(brute_force_3dm(big), Error);
  TripartiteHypergraph many{4, {}};
  for (int x = 1; x <= 4; ++x)
    for (int y = 1; y <= 4; ++y)
      for (int z = 1; z <= 3; ++z) many.edges.push_back({x, y, z});
  REQUIRE(many.m() == 48);
  CHECK_THROWS_AS(brute_force_3dm(many), Error);
}

TEST_CASE("check_hypergraph rejects duplicates and bad coordinates") {
  CHECK_THROWS_AS(check_hypergraph({1, {{1, 1, 1}, {1, 1, 1}}}), Error);
  CHECK_THROWS_AS(check_hypergraph({1, {{1, 2, 1}}}), Error);
  CHECK_THROWS_AS(check_hypergraph({1, {{0, 1, 1}}}), Error);
  CHECK_NOTHROW(check_hypergraph({2, {{1, 2, 1}, {2, 1, 2}}}));
}

TEST_CASE("verify_3dm_matching examples") {
  const TripartiteHypergraph h{2, {{1, 1, 1}, {2, 2, 2}, {1, 2, 1}}};
  CHECK(verify_3dm_matching(h, {{1, 1, 1}, {2, 2, 2}}));
  CHECK_FALSE(verify_3dm_matching(h, {{1, 1, 1}, {1, 2, 1}}));
  CHECK_FALSE(verify_3dm_matching(h, {{1, 1, 1}}));
  CHECK_FALSE(verify_3dm_matching(h, {{1, 1, 1}, {2, 2, 1}}));
  CHECK(verify_3dm_matching({0, {}}, {}));
}

TEST_CASE("brute_force_3dm agrees with subset enumeration") {
  for (const auto& h : testing::random_3dm_corpus(200, 11, 5, 12)) {
    const auto result = brute_force_3dm(h);
    const auto subsets = all_perfect_matchings(h);
    CHECK(result.has_value() == !subsets.empty());
    if (result) {
      CHECK(verify_3dm_matching(h, result->chosen));
      CHECK(std::find(subsets.begin(), subsets.end(), result->chosen) != subsets.end());
    }
  }
}

TEST_CASE("relabeling partite X keeps the answer") {
  int index = 0;
  for (const auto& h : testing::random_3dm_corpus(100, 3, 5, 10)) {
    std::vector<int> perm(h.n);
    std::iota(perm.begin(), perm.end(), 1);
    std::rotate(perm.begin(), perm.begin() + (h.n > 0 ? index % h.n : 0), perm.end());
    std::reverse(perm.begin(), perm.end());
    TripartiteHypergraph relabeled = h;
    for (auto& e : relabeled.edges) e.x = perm[e.x - 1];
    CHECK(brute_force_3dm(h).has_value() == brute_force_3dm(relabeled).has_value());
    ++index;
  }
}

}  // namespace
}  // namespace ivm
