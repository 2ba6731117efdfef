#include "ivm/solver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "ivm/error.hpp"
#include "ivm/flow.hpp"

namespace ivm {

std::string_view to_string(Status status) {
  return status == Status::kFeasible ? "FEASIBLE" : "INFEASIBLE";
}

std::string_view to_string(InfeasibleReason reason) {
  switch (reason) {
    case InfeasibleReason::kNone: return "NONE";
    case InfeasibleReason::kCounts: return "COUNTS";
    case InfeasibleReason::kCapacity: return "CAPACITY";
    case InfeasibleReason::kSearchExhausted: return "SEARCH_EXHAUSTED";
  }
  return "UNKNOWN";
}

CountsLayout counts_layout(const LayeredGraph& g) {
  const int ell = g.layer_count();
  CountsLayout layout;
  layout.layer_pairs.resize((ell + 1) / 2);
  layout.interfaces.resize(ell >= 1 ? (ell - 1) / 2 : 0);
  std::vector<Macroedge> macro = g.macroedges;
  std::sort(macro.begin(), macro.end());
  macro.erase(std::unique(macro.begin(), macro.end()), macro.end());
  for (const auto& e : macro) {
    if (e.layer % 2 == 1) {
      layout.layer_pairs[(e.layer + 1) / 2 - 1].push_back(e);
    } else {
      layout.interfaces[e.layer / 2 - 1].push_back(e);
    }
  }
  return layout;
}

namespace {

int clusters_in(const LayeredGraph& g, int layer) {
  return layer <= g.layer_count() ? g.cluster_count(layer) : 0;
}

// V centers per cluster of odd layer 2k+1 (k = 0 gives layer 1, all zero).
std::vector<std::int64_t> v_into(const LayeredGraph& g, const CountsLayout& layout,
                                 const CountsFormulation& counts, int k) {
  std::vector<std::int64_t> in(clusters_in(g, 2 * k + 1), 0);
  if (k >= 1) {
    const auto& pairs = layout.interfaces[k - 1];
    for (std::size_t e = 0; e < pairs.size(); ++e) in[pairs[e].to - 1] += counts.v[k - 1][e];
  }
  return in;
}

// V-shapes leaving each cluster of even layer 2k.
std::vector<std::int64_t> v_out_of(const LayeredGraph& g, const CountsLayout& layout,
                                   const CountsFormulation& counts, int k) {
  std::vector<std::int64_t> out(clusters_in(g, 2 * k), 0);
  if (k <= static_cast<int>(layout.interfaces.size())) {
    const auto& pairs = layout.interfaces[k - 1];
    for (std::size_t e = 0; e < pairs.size(); ++e) out[pairs[e].from - 1] += counts.v[k - 1][e];
  }
  return out;
}

struct PairProblem {
  std::vector<std::int64_t> supplies;
  std::vector<std::int64_t> demands;
  std::vector<TransportArc> arcs;
};

// Residual transportation problem on layer pair p given the V counts touching it.
PairProblem pair_problem(const LayeredGraph& g, const CountsLayout& layout, int p,
                         std::span<const std::int64_t> v_in,
                         std::span<const std::int64_t> v_out) {
  PairProblem problem;
  const int odd = 2 * p - 1;
  const int even = 2 * p;
  for (int j = 1; j <= clusters_in(g, odd); ++j) {
    problem.supplies.push_back(g.cluster_size(odd, j) - v_in[j - 1]);
  }
  for (int j = 1; j <= clusters_in(g, even); ++j) {
    problem.demands.push_back(g.cluster_size(even, j) - 2 * v_out[j - 1]);
  }
  for (const auto& e : layout.layer_pairs[p - 1]) {
    problem.arcs.push_back({e.from - 1, e.to - 1});
  }
  return problem;
}

std::int64_t pair_bound(const LayeredGraph& g, const Macroedge& e) {
  return std::min(g.cluster_size(e.layer + 1, e.to), g.cluster_size(e.layer, e.from) / 2);
}

bool capacity_allows(const LayeredGraph& g, const CountsLayout& layout,
                     std::span<const std::int64_t> totals) {
  for (std::size_t k = 0; k < layout.interfaces.size(); ++k) {
    std::int64_t room = 0;
    for (const auto& e : layout.interfaces[k]) room += pair_bound(g, e);
    if (room < totals[k]) return false;
  }
  return true;
}

class VSearch {
 public:
  VSearch(const LayeredGraph& g, std::span<const std::int64_t> totals, SolveStats& stats)
      : g_(g), layout_(counts_layout(g)), totals_(totals), stats_(stats) {
    const std::size_t interfaces = layout_.interfaces.size();
    counts_.v.resize(interfaces);
    counts_.i.resize(layout_.layer_pairs.size());
    suffix_room_.resize(interfaces);
    failed_.resize(interfaces + 1);
    for (std::size_t k = 0; k < interfaces; ++k) {
      const auto& pairs = layout_.interfaces[k];
      counts_.v[k].assign(pairs.size(), 0);
      suffix_room_[k].assign(pairs.size() + 1, 0);
      for (std::size_t e = pairs.size(); e-- > 0;) {
        suffix_room_[k][e] = suffix_room_[k][e + 1] + pair_bound(g_, pairs[e]);
      }
    }
  }

  std::optional<CountsFormulation> run() {
    if (totals_.size() != layout_.interfaces.size()) {
      throw Error(ErrorCode::kInvalidArgument, "one V total per interface expected");
    }
    if (!capacity_allows(g_, layout_, totals_)) return std::nullopt;
    if (layout_.layer_pairs.empty()) return counts_;
    const std::vector<std::int64_t> none(clusters_in(g_, 1), 0);
    if (!descend(1, none)) return std::nullopt;
    return counts_;
  }

 private:
  int interface_count() const { return static_cast<int>(layout_.interfaces.size()); }

  // Assigns interface k, given the V centers already placed on layer 2k-1.
  bool descend(int k, const std::vector<std::int64_t>& v_in) {
    if (k > interface_count()) {
      const std::vector<std::int64_t> none(clusters_in(g_, 2 * k), 0);
      return pair_feasible(k, v_in, none);
    }
    return compose(k, 0, totals_[k - 1], v_in);
  }

  bool compose(int k, std::size_t e, std::int64_t remaining,
               const std::vector<std::int64_t>& v_in) {
    ++stats_.nodes;
    const auto& pairs = layout_.interfaces[k - 1];
    if (e == pairs.size()) {
      if (remaining != 0) return false;
      const auto v_out = v_out_of(g_, layout_, counts_, k);
      if (!pair_feasible(k, v_in, v_out)) return false;
      auto next_in = v_into(g_, layout_, counts_, k);
      if (failed_[k].contains(next_in)) return false;
      if (descend(k + 1, next_in)) return true;
      failed_[k].insert(std::move(next_in));
      return false;
    }
    const std::int64_t high = std::min(pair_bound(g_, pairs[e]), remaining);
    const std::int64_t low = std::max<std::int64_t>(0, remaining - suffix_room_[k - 1][e + 1]);
    for (std::int64_t value = high; value >= low; --value) {
      counts_.v[k - 1][e] = value;
      if (compose(k, e + 1, remaining - value, v_in)) return true;
    }
    counts_.v[k - 1][e] = 0;
    return false;
  }

  bool pair_feasible(int p, std::span<const std::int64_t> v_in,
                     std::span<const std::int64_t> v_out) {
    const PairProblem problem = pair_problem(g_, layout_, p, v_in, v_out);
    ++stats_.flow_calls;
    auto flows = transportation_feasible(problem.supplies, problem.demands, problem.arcs);
    if (!flows) return false;
    counts_.i[p - 1] = std::move(*flows);
    return true;
  }

  const LayeredGraph& g_;
  CountsLayout layout_;
  std::span<const std::int64_t> totals_;
  SolveStats& stats_;
  CountsFormulation counts_;
  std::vector<std::vector<std::int64_t>> suffix_room_;
  // failed_[k]: V-center vectors on layer 2k+1 from which no completion exists.
  std::vector<std::set<std::vector<std::int64_t>>> failed_;
};

}  // namespace

bool satisfies_counts(const LayeredGraph& g, const CountsFormulation& counts) {
  const CountsLayout layout = counts_layout(g);
  if (counts.v.size() != layout.interfaces.size() ||
      counts.i.size() != layout.layer_pairs.size()) {
    return false;
  }
  for (std::size_t k = 0; k < layout.interfaces.size(); ++k) {
    if (counts.v[k].size() != layout.interfaces[k].size()) return false;
    for (auto x : counts.v[k]) {
      if (x < 0) return false;
    }
  }
  for (std::size_t p = 0; p < layout.layer_pairs.size(); ++p) {
    if (counts.i[p].size() != layout.layer_pairs[p].size()) return false;
    for (auto x : counts.i[p]) {
      if (x < 0) return false;
    }
  }
  for (int p = 1; p <= static_cast<int>(layout.layer_pairs.size()); ++p) {
    const auto v_in = v_into(g, layout, counts, p - 1);
    const auto v_out = v_out_of(g, layout, counts, p);
    PairProblem problem = pair_problem(g, layout, p, v_in, v_out);
    const auto& arcs = layout.layer_pairs[p - 1];
    for (std::size_t e = 0; e < arcs.size(); ++e) {
      problem.supplies[arcs[e].from - 1] -= counts.i[p - 1][e];
      problem.demands[arcs[e].to - 1] -= counts.i[p - 1][e];
    }
    auto is_zero = [](std::int64_t x) { return x == 0; };
    if (!std::all_of(problem.supplies.begin(), problem.supplies.end(), is_zero) ||
        !std::all_of(problem.demands.begin(), problem.demands.end(), is_zero)) {
      return false;
    }
  }
  return true;
}

std::optional<CountsFormulation> branch_v_distribution(const LayeredGraph& g,
                                                       std::span<const std::int64_t> totals,
                                                       SolveStats* stats) {
  SolveStats local;
  VSearch search(g, totals, stats ? *stats : local);
  return search.run();
}

IVMatching reconstruct_certificate(const LayeredGraph& g, const CountsFormulation& counts) {
  const CountsLayout layout = counts_layout(g);
  std::vector<std::vector<int>> cursor(g.layers.size());
  for (std::size_t k = 0; k < g.layers.size(); ++k) cursor[k].assign(g.layers[k].size(), 1);
  auto take = [&cursor](int layer, int cluster) {
    return VertexRef{layer, cluster, cursor[layer - 1][cluster - 1]++};
  };

  IVMatching m;
  for (std::size_t k = 0; k < layout.interfaces.size(); ++k) {
    const auto& pairs = layout.interfaces[k];
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      const auto& edge = pairs[e];
      for (std::int64_t t = 0; t < counts.v[k][e]; ++t) {
        const VertexRef center = take(edge.layer + 1, edge.to);
        const VertexRef left = take(edge.layer, edge.from);
        const VertexRef right = take(edge.layer, edge.from);
        m.vs.push_back({center, left, right});
      }
    }
  }
  for (std::size_t p = 0; p < layout.layer_pairs.size(); ++p) {
    const auto& arcs = layout.layer_pairs[p];
    for (std::size_t e = 0; e < arcs.size(); ++e) {
      const auto& edge = arcs[e];
      for (std::int64_t t = 0; t < counts.i[p][e]; ++t) {
        const VertexRef a = take(edge.layer, edge.from);
        const VertexRef b = take(edge.layer + 1, edge.to);
        m.is.push_back({a, b});
      }
    }
  }
  return canonical(std::move(m));
}

SolveResult solve_two_layers(const LayeredGraph& g) {
  if (g.layer_count() != 2) {
    throw Error(ErrorCode::kInvalidArgument, "two-layer solver needs exactly 2 layers");
  }
  SolveResult result;
  const CountsLayout layout = counts_layout(g);
  const std::vector<std::int64_t> none_in(g.cluster_count(1), 0);
  const std::vector<std::int64_t> none_out(g.cluster_count(2), 0);
  const PairProblem problem = pair_problem(g, layout, 1, none_in, none_out);
  if (g.layer_size(1) != g.layer_size(2)) {
    result.reason = InfeasibleReason::kCounts;
    return result;
  }
  ++result.stats.flow_calls;
  ++result.stats.nodes;
  auto flows = transportation_feasible(problem.supplies, problem.demands, problem.arcs);
  if (!flows) {
    result.reason = InfeasibleReason::kSearchExhausted;
    return result;
  }
  result.status = Status::kFeasible;
  result.certificate = reconstruct_certificate(g, CountsFormulation{{}, {std::move(*flows)}});
  return result;
}

std::optional<OddReduction> preprocess_odd(const LayeredGraph& g) {
  const int ell = g.layer_count();
  if (ell < 3 || ell % 2 == 0) {
    throw Error(ErrorCode::kInvalidArgument, "odd-layer preprocessing needs odd l >= 3");
  }
  OddReduction out;
  out.graph.layers.assign(g.layers.begin(), g.layers.end() - 1);
  for (const auto& e : g.macroedges) {
    if (e.layer < ell - 1) out.graph.macroedges.push_back(e);
  }
  for (int c = 1; c <= g.cluster_count(ell); ++c) {
    const std::int64_t size = g.cluster_size(ell, c);
    if (size == 0) continue;
    const auto down = std::find_if(g.macroedges.begin(), g.macroedges.end(),
                                   [&](const Macroedge& e) { return e.layer == ell - 1 && e.to == c; });
    if (down == g.macroedges.end()) return std::nullopt;
    auto& even_size = out.graph.layers[ell - 2][down->from - 1];
    if (even_size < 2 * size) return std::nullopt;
    even_size -= 2 * size;
    out.forced.push_back({down->from, c, size});
  }
  return out;
}

namespace {

SolveResult solve_even(const LayeredGraph& g) {
  if (g.layer_count() == 2) return solve_two_layers(g);
  SolveResult result;
  const auto totals = interface_v_totals(g);
  if (!totals) {
    result.reason = InfeasibleReason::kCounts;
    return result;
  }
  if (!capacity_allows(g, counts_layout(g), *totals)) {
    result.reason = InfeasibleReason::kCapacity;
    return result;
  }
  const auto counts = branch_v_distribution(g, *totals, &result.stats);
  if (!counts) {
    result.reason = InfeasibleReason::kSearchExhausted;
    return result;
  }
  result.status = Status::kFeasible;
  result.certificate = reconstruct_certificate(g, *counts);
  return result;
}

SolveResult solve_normalized(const LayeredGraph& g) {
  const int ell = g.layer_count();
  if (ell <= 1) {
    SolveResult result;
    if (g.vertex_count() == 0) {
      result.status = Status::kFeasible;
    } else {
      result.reason = InfeasibleReason::kCounts;
    }
    return result;
  }
  if (ell % 2 == 0) return solve_even(g);

  const auto reduced = preprocess_odd(g);
  if (!reduced) {
    SolveResult result;
    result.reason = InfeasibleReason::kCapacity;
    return result;
  }
  SolveResult result = solve_even(reduced->graph);
  if (!result.feasible()) return result;

  // Forced leaves occupy the lowest indices of their even cluster.
  std::vector<int> shift(g.cluster_count(ell - 1), 0);
  for (const auto& f : reduced->forced) shift[f.even_cluster - 1] = static_cast<int>(2 * f.count);
  auto lift = [&](VertexRef& v) {
    if (v.layer == ell - 1) v.index += shift[v.cluster - 1];
  };
  auto& cert = result.certificate;
  for (auto& s : cert.is) {
    lift(s.a);
    lift(s.b);
  }
  for (auto& s : cert.vs) {
    lift(s.center);
    lift(s.left);
    lift(s.right);
  }
  for (const auto& f : reduced->forced) {
    for (int t = 1; t <= f.count; ++t) {
      cert.vs.push_back({{ell, f.odd_cluster, t},
                         {ell - 1, f.even_cluster, 2 * t - 1},
                         {ell - 1, f.even_cluster, 2 * t}});
    }
  }
  cert = canonical(std::move(cert));
  return result;
}

}  // namespace

SolveResult solve(const LayeredGraph& g, std::int64_t vertex_cap) {
  if (!validate_graph(g).ok()) {
    throw Error(ErrorCode::kValidationError, "graph fails validation");
  }
  if (g.vertex_count() > vertex_cap) {
    throw Error(ErrorCode::kSizeLimit, std::to_string(g.vertex_count()) +
                                           " vertices exceed solver cap " +
                                           std::to_string(vertex_cap));
  }
  const NormalizedGraph norm = normalize(g);
  SolveResult result = solve_normalized(norm.graph);
  if (!result.feasible()) return result;

  auto restore = [&norm](VertexRef& v) {
    v.cluster = norm.cluster_origin[v.layer - 1][v.cluster - 1];
  };
  auto& cert = result.certificate;
  for (auto& s : cert.is) {
    restore(s.a);
    restore(s.b);
  }
  for (auto& s : cert.vs) {
    restore(s.center);
    restore(s.left);
    restore(s.right);
  }
  cert = canonical(std::move(cert));
  return result;
}

}  // namespace ivm
