#pragma once

#include <string>
#include <string_view>

#include "ivm/hypergraph.hpp"
#include "ivm/model.hpp"
#include "ivm/reduction.hpp"

namespace ivm {

// Line-oriented text formats. Tokens are whitespace separated, blank lines
// are ignored, every index is 1-based. Parse failures throw
// Error(kParseError) with the offending line number.

// ivg 1 / layers L / layer k: s1 s2 ... (k = 1..L) / macro k j j'
// With `strict`, a graph failing validate_graph throws Error(kValidationError).
LayeredGraph parse_ivg(std::string_view text, bool strict = false);
std::string emit_ivg(const LayeredGraph& g);

// 3dm 1 / n N / m M / e x y z (M lines, input order kept)
TripartiteHypergraph parse_3dm(std::string_view text);
std::string emit_3dm(const TripartiteHypergraph& h);

// cert 1 / I k j i  k' j' i' / V center  left  right
IVMatching parse_cert(std::string_view text);
std::string emit_cert(const IVMatching& m);

// map 1 / n N / m M / x i c / y i c / z i c / e idx pair_cluster center_cluster
ReductionMap parse_map(std::string_view text);
std::string emit_map(const ReductionMap& map);

// match 1 / k K / e x y z (sorted)
PerfectMatching3DM parse_matching(std::string_view text);
std::string emit_matching(const PerfectMatching3DM& matching);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace ivm
