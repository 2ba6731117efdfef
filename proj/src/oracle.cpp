#include <string>

#include "ivm/error.hpp"
#include "ivm/solver.hpp"

namespace ivm {

namespace {

// Covers the lowest uncovered vertex with every shape that can contain it.
class ShapeEnumerator {
 public:
  ShapeEnumerator(const LayeredGraph& g, const std::function<bool(const IVMatching&)>& visit)
      : x_(expand_vertices(g)), used_(x_.vertices.size(), 0), visit_(visit) {}

  std::int64_t found() const { return found_; }
  std::int64_t nodes() const { return nodes_; }

  // False once the visitor asked to stop.
  bool run(std::size_t from = 0) {
    ++nodes_;
    while (from < used_.size() && used_[from]) ++from;
    if (from == used_.size()) {
      ++found_;
      return visit_(canonical(current_));
    }
    const std::size_t u = from;
    const VertexRef& v = x_.vertices[u];
    const auto& adj = x_.adjacency[u];

    if (v.layer % 2 == 0) {
      for (auto w : adj) {
        if (used_[w] || x_.vertices[w].layer != v.layer - 1) continue;
        if (!with_i(w, u, from)) return false;
      }
      for (auto c : adj) {
        if (used_[c] || x_.vertices[c].layer != v.layer + 1) continue;
        for (auto w : x_.adjacency[c]) {
          if (w == u || used_[w] || x_.vertices[w].layer != v.layer ||
              x_.vertices[w].cluster != v.cluster) {
            continue;
          }
          if (!with_v(c, u, w, from)) return false;
        }
      }
    } else {
      for (auto w : adj) {
        if (used_[w] || x_.vertices[w].layer != v.layer + 1) continue;
        if (!with_i(u, w, from)) return false;
      }
      if (v.layer >= 3) {
        for (std::size_t i = 0; i < adj.size(); ++i) {
          const auto w1 = adj[i];
          if (used_[w1] || x_.vertices[w1].layer != v.layer - 1) continue;
          for (std::size_t j = i + 1; j < adj.size(); ++j) {
            const auto w2 = adj[j];
            if (used_[w2] || x_.vertices[w2].layer != v.layer - 1 ||
                x_.vertices[w2].cluster != x_.vertices[w1].cluster) {
              continue;
            }
            if (!with_v(u, w1, w2, from)) return false;
          }
        }
      }
    }
    return true;
  }

 private:
  bool with_i(std::size_t odd, std::size_t even, std::size_t from) {
    used_[odd] = used_[even] = 1;
    current_.is.push_back({x_.vertices[odd], x_.vertices[even]});
    const bool go_on = run(from);
    current_.is.pop_back();
    used_[odd] = used_[even] = 0;
    return go_on;
  }

  bool with_v(std::size_t center, std::size_t left, std::size_t right, std::size_t from) {
    used_[center] = used_[left] = used_[right] = 1;
    current_.vs.push_back({x_.vertices[center], x_.vertices[left], x_.vertices[right]});
    const bool go_on = run(from);
    current_.vs.pop_back();
    used_[center] = used_[left] = used_[right] = 0;
    return go_on;
  }

  ExplicitGraph x_;
  std::vector<char> used_;
  const std::function<bool(const IVMatching&)>& visit_;
  IVMatching current_;
  std::int64_t found_ = 0;
  std::int64_t nodes_ = 0;
};

void check_oracle_input(const LayeredGraph& g) {
  if (!validate_graph(g).ok()) {
    throw Error(ErrorCode::kValidationError, "graph fails validation");
  }
  if (g.vertex_count() > kMaxBruteForceVertices) {
    throw Error(ErrorCode::kSizeLimit, "brute-force oracle is limited to " +
                                           std::to_string(kMaxBruteForceVertices) +
                                           " vertices");
  }
}

}  // namespace

std::int64_t for_each_iv_matching(const LayeredGraph& g,
                                  const std::function<bool(const IVMatching&)>& visit) {
  check_oracle_input(g);
  ShapeEnumerator search(g, visit);
  search.run();
  return search.found();
}

SolveResult brute_force_iv(const LayeredGraph& g) {
  check_oracle_input(g);
  SolveResult result;
  const std::function<bool(const IVMatching&)> keep_first = [&result](const IVMatching& m) {
    result.status = Status::kFeasible;
    result.certificate = m;
    return false;
  };
  ShapeEnumerator search(g, keep_first);
  search.run();
  result.stats.nodes = search.nodes();
  if (!result.feasible()) result.reason = InfeasibleReason::kSearchExhausted;
  return result;
}

}  // namespace ivm
