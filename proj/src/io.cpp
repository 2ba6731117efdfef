#include "ivm/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "ivm/error.hpp"

namespace ivm {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++number;
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      std::size_t stop = pos;
      while (stop < raw.size() && !std::isspace(static_cast<unsigned char>(raw[stop]))) ++stop;
      if (stop > pos) line.tokens.push_back(raw.substr(pos, stop - pos));
      pos = stop;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

std::int64_t number(const Line& line, std::string_view token, std::int64_t max_value) {
  std::int64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value < 0) {
    fail(line.number, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  if (value > max_value) {
    fail(line.number, "value " + std::string(token) + " too large");
  }
  return value;
}

int index_value(const Line& line, std::string_view token) {
  return static_cast<int>(number(line, token, kMaxVertices));
}

// Checks the keyword and the exact token count.
void expect(const Line& line, std::string_view keyword, std::size_t count) {
  if (line.tokens.front() != keyword) {
    fail(line.number, "expected '" + std::string(keyword) + "', got '" +
                          std::string(line.tokens.front()) + "'");
  }
  if (line.tokens.size() != count) {
    fail(line.number, "'" + std::string(keyword) + "' takes " + std::to_string(count - 1) +
                          " values");
  }
}

class Cursor {
 public:
  Cursor(std::string_view text, std::string_view magic) : lines_(tokenize(text)) {
    if (lines_.empty()) fail(1, "empty input, expected '" + std::string(magic) + " 1'");
    const Line& head = next();
    expect(head, magic, 2);
    if (head.tokens[1] != "1") fail(head.number, "unsupported version");
  }

  bool done() const { return pos_ == lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }
  const Line& next() {
    if (done()) fail(last_line(), "unexpected end of input");
    return lines_[pos_++];
  }
  std::int64_t header(std::string_view keyword, std::int64_t max_value) {
    const Line& line = next();
    expect(line, keyword, 2);
    return number(line, line.tokens[1], max_value);
  }
  int last_line() const { return lines_.empty() ? 1 : lines_.back().number; }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

VertexRef vertex_at(const Line& line, std::size_t first) {
  return {index_value(line, line.tokens[first]), index_value(line, line.tokens[first + 1]),
          index_value(line, line.tokens[first + 2])};
}

void put(std::ostringstream& os, const VertexRef& v) {
  os << v.layer << ' ' << v.cluster << ' ' << v.index;
}

Triple triple_at(const Line& line, int n) {
  Triple t{index_value(line, line.tokens[1]), index_value(line, line.tokens[2]),
           index_value(line, line.tokens[3])};
  for (int c : {t.x, t.y, t.z}) {
    if (c < 1 || c > n) fail(line.number, "coordinate " + std::to_string(c) + " outside 1..n");
  }
  return t;
}

}  // namespace

LayeredGraph parse_ivg(std::string_view text, bool strict) {
  Cursor in(text, "ivg");
  const auto layer_count = in.header("layers", kMaxVertices);
  LayeredGraph g;
  for (std::int64_t k = 1; k <= layer_count; ++k) {
    const Line& line = in.next();
    if (line.tokens.front() != "layer") fail(line.number, "expected 'layer " + std::to_string(k) + ":'");
    std::size_t first_size = 0;
    std::string_view label = line.tokens.size() > 1 ? line.tokens[1] : std::string_view{};
    if (label.size() > 1 && label.back() == ':') {
      label.remove_suffix(1);
      first_size = 2;
    } else if (line.tokens.size() > 2 && line.tokens[2] == ":") {
      first_size = 3;
    } else {
      fail(line.number, "expected 'layer " + std::to_string(k) + ":'");
    }
    if (number(line, label, kMaxVertices) != k) {
      fail(line.number, "layers must be listed in order, expected layer " + std::to_string(k));
    }
    std::vector<std::int64_t> sizes;
    for (std::size_t t = first_size; t < line.tokens.size(); ++t) {
      sizes.push_back(number(line, line.tokens[t], kMaxVertices));
    }
    g.layers.push_back(std::move(sizes));
  }
  while (!in.done()) {
    const Line& line = in.next();
    expect(line, "macro", 4);
    g.macroedges.push_back({index_value(line, line.tokens[1]), index_value(line, line.tokens[2]),
                            index_value(line, line.tokens[3])});
  }
  if (strict) {
    const auto report = validate_graph(g);
    if (!report.ok()) {
      const auto& first = report.violations.front();
      throw Error(ErrorCode::kValidationError,
                  std::string(to_string(first.code)) + ' ' + first.locus);
    }
  }
  return g;
}

std::string emit_ivg(const LayeredGraph& g) {
  std::ostringstream os;
  os << "ivg 1\nlayers " << g.layer_count() << '\n';
  for (int k = 1; k <= g.layer_count(); ++k) {
    os << "layer " << k << ':';
    for (auto s : g.layers[k - 1]) os << ' ' << s;
    os << '\n';
  }
  for (const auto& e : canonical(g).macroedges) {
    os << "macro " << e.layer << ' ' << e.from << ' ' << e.to << '\n';
  }
  return os.str();
}

TripartiteHypergraph parse_3dm(std::string_view text) {
  Cursor in(text, "3dm");
  TripartiteHypergraph h;
  h.n = static_cast<int>(in.header("n", kMaxVertices));
  const auto m = in.header("m", kMaxVertices);
  std::vector<Triple> seen;
  while (!in.done()) {
    const Line& line = in.next();
    expect(line, "e", 4);
    const Triple t = triple_at(line, h.n);
    const auto at = std::lower_bound(seen.begin(), seen.end(), t);
    if (at != seen.end() && *at == t) fail(line.number, "duplicate triple");
    seen.insert(at, t);
    h.edges.push_back(t);
  }
  if (h.m() != m) {
    throw Error(ErrorCode::kCountMismatch, "header says m = " + std::to_string(m) + ", found " +
                                               std::to_string(h.m()) + " 'e' lines");
  }
  return h;
}

std::string emit_3dm(const TripartiteHypergraph& h) {
  std::ostringstream os;
  os << "3dm 1\nn " << h.n << "\nm " << h.m() << '\n';
  for (const auto& e : h.edges) os << "e " << e.x << ' ' << e.y << ' ' << e.z << '\n';
  return os.str();
}

IVMatching parse_cert(std::string_view text) {
  Cursor in(text, "cert");
  IVMatching m;
  while (!in.done()) {
    const Line& line = in.next();
    if (line.tokens.front() == "I") {
      expect(line, "I", 7);
      m.is.push_back({vertex_at(line, 1), vertex_at(line, 4)});
    } else if (line.tokens.front() == "V") {
      expect(line, "V", 10);
      m.vs.push_back({vertex_at(line, 1), vertex_at(line, 4), vertex_at(line, 7)});
    } else {
      fail(line.number, "expected 'I' or 'V', got '" + std::string(line.tokens.front()) + "'");
    }
  }
  return m;
}

std::string emit_cert(const IVMatching& m) {
  const IVMatching sorted = canonical(m);
  std::ostringstream os;
  os << "cert 1\n";
  for (const auto& s : sorted.is) {
    os << "I ";
    put(os, s.a);
    os << "  ";
    put(os, s.b);
    os << '\n';
  }
  for (const auto& s : sorted.vs) {
    os << "V ";
    put(os, s.center);
    os << "  ";
    put(os, s.left);
    os << "  ";
    put(os, s.right);
    os << '\n';
  }
  return os.str();
}

ReductionMap parse_map(std::string_view text) {
  Cursor in(text, "map");
  ReductionMap map;
  map.n = static_cast<int>(in.header("n", kMaxVertices));
  map.m = static_cast<int>(in.header("m", kMaxVertices));
  map.x_cluster.assign(map.n, 0);
  map.y_cluster.assign(map.n, 0);
  map.z_cluster.assign(map.n, 0);
  map.pair_cluster.assign(map.m, 0);
  map.center_cluster.assign(map.m, 0);
  while (!in.done()) {
    const Line& line = in.next();
    const auto key = line.tokens.front();
    if (key == "e") {
      expect(line, "e", 4);
      const int e = index_value(line, line.tokens[1]);
      if (e < 1 || e > map.m) fail(line.number, "hyperedge index outside 1..m");
      if (map.pair_cluster[e - 1] != 0) fail(line.number, "hyperedge listed twice");
      map.pair_cluster[e - 1] = index_value(line, line.tokens[2]);
      map.center_cluster[e - 1] = index_value(line, line.tokens[3]);
      if (map.pair_cluster[e - 1] == 0) fail(line.number, "cluster index must be positive");
      continue;
    }
    std::vector<int>* target = key == "x"   ? &map.x_cluster
                               : key == "y" ? &map.y_cluster
                               : key == "z" ? &map.z_cluster
                                            : nullptr;
    if (target == nullptr) fail(line.number, "unknown record '" + std::string(key) + "'");
    expect(line, key, 3);
    const int i = index_value(line, line.tokens[1]);
    if (i < 1 || i > map.n) fail(line.number, "vertex index outside 1..n");
    if ((*target)[i - 1] != 0) fail(line.number, "vertex listed twice");
    (*target)[i - 1] = index_value(line, line.tokens[2]);
    if ((*target)[i - 1] == 0) fail(line.number, "cluster index must be positive");
  }
  auto complete = [](const std::vector<int>& v) {
    return std::find(v.begin(), v.end(), 0) == v.end();
  };
  if (!complete(map.x_cluster) || !complete(map.y_cluster) || !complete(map.z_cluster) ||
      !complete(map.pair_cluster)) {
    throw Error(ErrorCode::kCountMismatch, "map does not list every vertex and hyperedge");
  }
  return map;
}

std::string emit_map(const ReductionMap& map) {
  std::ostringstream os;
  os << "map 1\nn " << map.n << "\nm " << map.m << '\n';
  for (int i = 0; i < map.n; ++i) os << "x " << i + 1 << ' ' << map.x_cluster[i] << '\n';
  for (int i = 0; i < map.n; ++i) os << "y " << i + 1 << ' ' << map.y_cluster[i] << '\n';
  for (int i = 0; i < map.n; ++i) os << "z " << i + 1 << ' ' << map.z_cluster[i] << '\n';
  for (int e = 0; e < map.m; ++e) {
    os << "e " << e + 1 << ' ' << map.pair_cluster[e] << ' ' << map.center_cluster[e] << '\n';
  }
  return os.str();
}

PerfectMatching3DM parse_matching(std::string_view text) {
  Cursor in(text, "match");
  const auto k = in.header("k", kMaxVertices);
  PerfectMatching3DM matching;
  while (!in.done()) {
    const Line& line = in.next();
    expect(line, "e", 4);
    matching.chosen.push_back({index_value(line, line.tokens[1]),
                               index_value(line, line.tokens[2]),
                               index_value(line, line.tokens[3])});
  }
  if (static_cast<std::int64_t>(matching.chosen.size()) != k) {
    throw Error(ErrorCode::kCountMismatch, "header says k = " + std::to_string(k) + ", found " +
                                               std::to_string(matching.chosen.size()) +
                                               " 'e' lines");
  }
  std::sort(matching.chosen.begin(), matching.chosen.end());
  return matching;
}

std::string emit_matching(const PerfectMatching3DM& matching) {
  std::vector<Triple> sorted = matching.chosen;
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream os;
  os << "match 1\nk " << sorted.size() << '\n';
  for (const auto& e : sorted) os << "e " << e.x << ' ' << e.y << ' ' << e.z << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << content;
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
}

}  // namespace ivm
