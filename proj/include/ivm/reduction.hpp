#pragma once

#include <vector>

#include "ivm/hypergraph.hpp"
#include "ivm/model.hpp"

namespace ivm {

// Where each piece of a 3DM instance lives in the reduced layered graph.
// All vectors are indexed from 0 and hold 1-based cluster indices.
struct ReductionMap {
  int n = 0;
  int m = 0;
  std::vector<int> x_cluster;       // layer 1
  std::vector<int> y_cluster;       // layer 1
  std::vector<int> z_cluster;       // layer 4
  std::vector<int> pair_cluster;    // layer 2, holds {x_e, y_e}
  std::vector<int> center_cluster;  // layer 3, holds {z_e}

  friend bool operator==(const ReductionMap&, const ReductionMap&) = default;
};

struct Reduction {
  LayeredGraph graph;
  ReductionMap map;
};

// The ordering used by reduce_3dm: X then Y in layer 1, hyperedges in input
// order in layers 2 and 3, Z in layer 4.
ReductionMap canonical_reduction_map(const TripartiteHypergraph& h);

// Four-layer gadget graph for `h` laid out according to `map`. Throws
// Error(kInvalidArgument) when the map is not a set of bijections sized for h.
LayeredGraph build_reduced_graph(const TripartiteHypergraph& h, const ReductionMap& map);

Reduction reduce_3dm(const TripartiteHypergraph& h);

// Hyperedges whose gadget is covered by I-shapes. Throws Error(kInvalidCert)
// if the certificate does not verify on the reduced graph.
PerfectMatching3DM lift_to_3dm(const TripartiteHypergraph& h, const ReductionMap& map,
                               const IVMatching& cert);

// I-shapes for chosen hyperedges, one V per unchosen one. Throws
// Error(kInvalidMatching) if `matching` is not a perfect matching of h.
IVMatching embed_from_3dm(const TripartiteHypergraph& h, const ReductionMap& map,
                          const PerfectMatching3DM& matching);

}  // namespace ivm
