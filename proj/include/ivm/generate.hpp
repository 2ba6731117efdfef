#pragma once

#include <cstdint>
#include <vector>

#include "ivm/hypergraph.hpp"
#include "ivm/model.hpp"

namespace ivm {

// splitmix64. below(k) is next() % k; chance(p) compares the top 53 bits,
// scaled to [0, 1), against p. Fixed so corpora reproduce across languages.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);
  bool chance(double p);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i-- > 1;) {
      std::swap(items[i], items[below(i + 1)]);
    }
  }

 private:
  std::uint64_t state_;
};

struct Gen3dmConfig {
  std::uint64_t seed = 0;
  int n = 0;
  int m = 0;
  bool planted = false;
};

struct GenIvgConfig {
  std::uint64_t seed = 0;
  int layers = 2;
  int max_cluster_size = 3;
  int max_clusters = 3;
  double density = 0.5;
  bool planted = false;
};

// Throws Error(kInvalidArgument) unless 0 <= m <= n^3 (and m >= n when planted).
TripartiteHypergraph generate_3dm(const Gen3dmConfig& config);

// Throws Error(kInvalidArgument) unless 2 <= layers <= 64, sizes >= 1 and
// density in [0, 1]. Planted instances are feasible by construction.
LayeredGraph generate_ivg(const GenIvgConfig& config);

}  // namespace ivm
