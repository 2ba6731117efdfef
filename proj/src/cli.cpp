#include "ivm/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>

#include "ivm/error.hpp"
#include "ivm/generate.hpp"
#include "ivm/io.hpp"
#include "ivm/reduction.hpp"
#include "ivm/solver.hpp"

namespace ivm {

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("IVM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "IVM_SEED is not an unsigned integer");
    }
  }
  return 0;
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
}

int report_solve(const SolveResult& result, const std::string& cert_path, std::ostream& out) {
  if (result.feasible()) {
    out << "FEASIBLE\n";
    if (!cert_path.empty()) write_file(cert_path, emit_cert(result.certificate));
  } else {
    out << "INFEASIBLE " << to_string(result.reason) << '\n';
  }
  out << "nodes " << result.stats.nodes << " flow_calls " << result.stats.flow_calls << '\n';
  return result.feasible() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"IV-matching toolkit", "ivm"};
  app.require_subcommand(1);

  std::string graph_path, cert_path, hyper_path, map_path, match_path, out_path;
  bool strict = false;

  auto* solve_cmd = app.add_subcommand("solve", "Decide an .ivg instance with the exact solver");
  solve_cmd->add_option("ivg", graph_path)->required();
  solve_cmd->add_option("--cert", cert_path, "Write the certificate here when feasible");

  auto* oracle_cmd = app.add_subcommand("oracle", "Decide an .ivg instance by brute force");
  oracle_cmd->add_option("ivg", graph_path)->required();
  oracle_cmd->add_option("--cert", cert_path, "Write the certificate here when feasible");

  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against an instance");
  verify_cmd->add_option("ivg", graph_path)->required();
  verify_cmd->add_option("cert", cert_path)->required();

  auto* validate_cmd = app.add_subcommand("validate", "Report structural problems of an instance");
  validate_cmd->add_option("ivg", graph_path)->required();
  validate_cmd->add_flag("--strict", strict, "Exit 2 instead of listing violations");

  auto* reduce_cmd = app.add_subcommand("reduce", "Build the layered graph of a 3DM instance");
  reduce_cmd->add_option("3dm", hyper_path)->required();
  reduce_cmd->add_option("-o,--output", out_path)->required();
  reduce_cmd->add_option("--map", map_path, "Write the reduction map here");

  auto* lift_cmd = app.add_subcommand("lift", "Turn a certificate of a reduced instance into a 3DM matching");
  lift_cmd->add_option("3dm", hyper_path)->required();
  lift_cmd->add_option("map", map_path)->required();
  lift_cmd->add_option("cert", cert_path)->required();

  auto* embed_cmd = app.add_subcommand("embed", "Turn a 3DM matching into a certificate of the reduced instance");
  embed_cmd->add_option("3dm", hyper_path)->required();
  embed_cmd->add_option("map", map_path)->required();
  embed_cmd->add_option("matching", match_path)->required();

  Gen3dmConfig gen3;
  std::optional<std::uint64_t> seed;
  auto* gen3_cmd = app.add_subcommand("gen-3dm", "Generate a random 3DM instance");
  gen3_cmd->add_option("--n", gen3.n)->required();
  gen3_cmd->add_option("--m", gen3.m)->required();
  gen3_cmd->add_option("--seed", seed);
  gen3_cmd->add_flag("--planted", gen3.planted);
  gen3_cmd->add_option("-o,--output", out_path);

  GenIvgConfig geni;
  auto* geni_cmd = app.add_subcommand("gen-ivg", "Generate a random layered graph");
  geni_cmd->add_option("--layers", geni.layers)->required();
  geni_cmd->add_option("--max-cluster-size", geni.max_cluster_size);
  geni_cmd->add_option("--max-clusters", geni.max_clusters);
  geni_cmd->add_option("--density", geni.density);
  geni_cmd->add_option("--seed", seed);
  geni_cmd->add_flag("--planted", geni.planted);
  geni_cmd->add_option("-o,--output", out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ivm: " << e.what() << '\n';
    return 2;
  }

  try {
    if (solve_cmd->parsed()) {
      return report_solve(solve(parse_ivg(read_file(graph_path), true)), cert_path, out);
    }
    if (oracle_cmd->parsed()) {
      return report_solve(brute_force_iv(parse_ivg(read_file(graph_path), true)), cert_path, out);
    }
    if (verify_cmd->parsed()) {
      const LayeredGraph g = parse_ivg(read_file(graph_path), true);
      const VerifyReport report = verify_matching(g, parse_cert(read_file(cert_path)));
      out << (report.ok() ? "VALID\n" : "INVALID\n") << report.to_text();
      return report.ok() ? 0 : 1;
    }
    if (validate_cmd->parsed()) {
      const LayeredGraph g = parse_ivg(read_file(graph_path), strict);
      const ValidationReport report = validate_graph(g);
      out << (report.ok() ? "VALID\n" : "INVALID\n") << report.to_text();
      return report.ok() ? 0 : 1;
    }
    if (reduce_cmd->parsed()) {
      const Reduction r = reduce_3dm(parse_3dm(read_file(hyper_path)));
      write_file(out_path, emit_ivg(r.graph));
      if (!map_path.empty()) write_file(map_path, emit_map(r.map));
      return 0;
    }
    if (lift_cmd->parsed()) {
      const auto h = parse_3dm(read_file(hyper_path));
      const auto map = parse_map(read_file(map_path));
      out << emit_matching(lift_to_3dm(h, map, parse_cert(read_file(cert_path))));
      return 0;
    }
    if (embed_cmd->parsed()) {
      const auto h = parse_3dm(read_file(hyper_path));
      const auto map = parse_map(read_file(map_path));
      out << emit_cert(embed_from_3dm(h, map, parse_matching(read_file(match_path))));
      return 0;
    }
    if (gen3_cmd->parsed()) {
      gen3.seed = seed ? *seed : default_seed();
      emit(out, out_path, emit_3dm(generate_3dm(gen3)));
      return 0;
    }
    if (geni_cmd->parsed()) {
      geni.seed = seed ? *seed : default_seed();
      emit(out, out_path, emit_ivg(generate_ivg(geni)));
      return 0;
    }
  } catch (const Error& e) {
    err << "ivm: " << e.what() << '\n';
    const bool rejected =
        e.code() == ErrorCode::kInvalidCert || e.code() == ErrorCode::kInvalidMatching;
    return rejected ? 1 : 2;
  }
  return 2;
}

}  // namespace ivm
