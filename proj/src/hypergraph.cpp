#include "ivm/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "ivm/error.hpp"

namespace ivm {

void check_hypergraph(const TripartiteHypergraph& h) {
  if (h.n < 0) throw Error(ErrorCode::kValidationError, "negative n");
  std::vector<Triple> sorted = h.edges;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& e = sorted[i];
    for (int c : {e.x, e.y, e.z}) {
      if (c < 1 || c > h.n) {
        throw Error(ErrorCode::kValidationError,
                    "coordinate " + std::to_string(c) + " outside 1.." + std::to_string(h.n));
      }
    }
    if (i > 0 && sorted[i - 1] == e) {
      throw Error(ErrorCode::kValidationError,
                  "duplicate triple " + std::to_string(e.x) + ' ' + std::to_string(e.y) +
                      ' ' + std::to_string(e.z));
    }
  }
}

namespace {

struct Search {
  const TripartiteHypergraph& h;
  std::vector<std::vector<int>> by_x;  // edge ids per x, input order
  std::vector<char> used_y;
  std::vector<char> used_z;
  std::vector<int> picked;

  bool cover_from(int x) {
    if (x > h.n) return true;
    for (int id : by_x[x]) {
      const auto& e = h.edges[id];
      if (used_y[e.y] || used_z[e.z]) continue;
      used_y[e.y] = used_z[e.z] = 1;
      picked.push_back(id);
      if (cover_from(x + 1)) return true;
      picked.pop_back();
      used_y[e.y] = used_z[e.z] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<PerfectMatching3DM> brute_force_3dm(const TripartiteHypergraph& h) {
  check_hypergraph(h);
  if (h.n > kMaxOracleN || h.m() > kMaxOracleM) {
    throw Error(ErrorCode::kSizeLimit, "3DM oracle is limited to n <= 10, m <= 40");
  }
  Search search{h, std::vector<std::vector<int>>(h.n + 1), std::vector<char>(h.n + 1, 0),
                std::vector<char>(h.n + 1, 0), {}};
  for (int id = 0; id < h.m(); ++id) search.by_x[h.edges[id].x].push_back(id);
  if (!search.cover_from(1)) return std::nullopt;

  PerfectMatching3DM result;
  for (int id : search.picked) result.chosen.push_back(h.edges[id]);
  std::sort(result.chosen.begin(), result.chosen.end());
  return result;
}

bool verify_3dm_matching(const TripartiteHypergraph& h, const std::vector<Triple>& chosen) {
  if (static_cast<int>(chosen.size()) != h.n) return false;
  std::vector<char> seen_x(h.n + 1, 0), seen_y(h.n + 1, 0), seen_z(h.n + 1, 0);
  for (const auto& e : chosen) {
    if (std::find(h.edges.begin(), h.edges.end(), e) == h.edges.end()) return false;
    if (seen_x[e.x] || seen_y[e.y] || seen_z[e.z]) return false;
    seen_x[e.x] = seen_y[e.y] = seen_z[e.z] = 1;
  }
  return true;
}

}  // namespace ivm
