// cag: command-line front end for the circular-arc boxicity library.
//
// Exit codes: 0 success, 1 a representation failed verification,
// 2 bad input or an unmet precondition.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cag/analysis.hpp"
#include "cag/constructions.hpp"
#include "cag/error.hpp"
#include "cag/generators.hpp"
#include "cag/json_io.hpp"
#include "cag/oracle.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kBadInput = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cag::Error(cag::ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "-" or empty writes to stdout.
void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cag::Error(cag::ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

void print(const ordered_json& doc) { std::cout << doc.dump() << "\n"; }

long max_deg(const cag::ArcFamily& f) {
  return static_cast<long>(cag::max_degree(cag::intersection_graph(f)));
}

cag::ArcFamily with_distinct_endpoints(const cag::ArcFamily& f) {
  return cag::endpoints_distinct(f) ? f : cag::normalize(f, 2);
}

struct NormalizeArgs {
  std::string in, out;
  int alpha = 2;
};

int run_normalize(const NormalizeArgs& a) {
  const auto f = cag::json::parse_family(read_file(a.in));
  const auto g = cag::normalize(f, a.alpha);
  write_output(a.out, cag::json::dump_family(g));
  print(ordered_json{{"n", g.size()}, {"delta", max_deg(g)}});
  return kOk;
}

int run_stats(const std::string& in) {
  const auto f = cag::json::parse_family(read_file(in));
  const auto distinct = with_distinct_endpoints(f);
  const auto cover = cag::min_circular_cover(f);
  const long delta = max_deg(f);
  const auto alpha = cag::min_alpha_for_degree(static_cast<long>(f.size()), delta);
  ordered_json doc;
  doc["n"] = f.size();
  doc["delta"] = delta;
  doc["r_inf"] = cag::sweep_overlap(distinct).r_inf;
  doc["L"] = cover.covered() ? ordered_json(*cover.L) : ordered_json(nullptr);
  doc["covered"] = cover.covered();
  doc["min_alpha"] = alpha ? ordered_json(*alpha) : ordered_json(nullptr);
  print(doc);
  return kOk;
}

struct BuildArgs {
  std::string in, out, method = "auto";
  std::optional<int> alpha;
};

void print_candidates(const cag::AutoResult& result) {
  std::cerr << "method    applicable  dims  note\n";
  for (const auto& c : result.candidates) {
    std::string name(cag::to_string(c.method));
    name.resize(10, ' ');
    std::string dims = c.dims ? std::to_string(*c.dims) : "-";
    dims.resize(6, ' ');
    std::cerr << name << (c.applicable ? "yes         " : "no          ") << dims << c.note
              << (c.method == result.chosen ? "  <- chosen" : "") << "\n";
  }
}

int run_build(const BuildArgs& a) {
  const auto f = cag::json::parse_family(read_file(a.in));
  const cag::Method method = cag::parse_method(a.method);
  if (a.alpha && method != cag::Method::Degree) {
    throw cag::Error(cag::ErrorKind::InvalidArgument, "--alpha only applies to --method degree");
  }
  cag::BoxRep rep;
  cag::Method used = method;
  switch (method) {
    case cag::Method::Interval:
      rep = cag::build_interval_case(with_distinct_endpoints(f));
      break;
    case cag::Method::Overlap:
      rep = cag::build_overlap(with_distinct_endpoints(f));
      break;
    case cag::Method::Cover:
      rep = cag::build_cover(with_distinct_endpoints(f));
      break;
    case cag::Method::Degree: {
      int alpha = 0;
      if (a.alpha) {
        alpha = *a.alpha;
      } else {
        const auto best = cag::min_alpha_for_degree(static_cast<long>(f.size()), max_deg(f));
        if (!best) throw cag::Error(cag::ErrorKind::DegreeTooHigh, "no alpha fits the maximum degree");
        alpha = *best;
      }
      rep = cag::build_degree(f, alpha);
      break;
    }
    case cag::Method::Auto: {
      auto result = cag::build_auto_detailed(f);
      print_candidates(result);
      rep = std::move(result.rep);
      used = result.chosen;
      break;
    }
  }
  write_output(a.out, cag::json::dump_box_rep(rep));
  print(ordered_json{{"dims", rep.dims()}, {"method_used", std::string(cag::to_string(used))}});
  return kOk;
}

struct VerifyArgs {
  std::string rep, arcs, graph;
};

int run_verify(const VerifyArgs& a) {
  const auto rep = cag::json::parse_box_rep(read_file(a.rep));
  const cag::Graph g = a.arcs.empty() ? cag::json::parse_graph(read_file(a.graph))
                                      : cag::intersection_graph(cag::json::parse_family(read_file(a.arcs)));
  const auto report = cag::verify(rep, g);
  std::cout << cag::json::dump_verify_report(report, g);
  return report.ok ? kOk : kVerifyFailed;
}

int run_oracle(const std::string& in, std::size_t max_n, std::size_t max_non_edges) {
  const auto g = cag::json::parse_graph(read_file(in));
  const int box = cag::boxicity_exact(g, cag::OracleLimits{max_n, max_non_edges});
  print(ordered_json{{"boxicity", box}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boxicity representations of circular-arc graphs"};
  app.require_subcommand(1);

  NormalizeArgs norm;
  auto* normalize = app.add_subcommand("normalize", "Rewrite a family in normal form for alpha");
  normalize->add_option("--in", norm.in, "Arc-family JSON")->required();
  normalize->add_option("--alpha", norm.alpha, "Number of reference axes")->check(CLI::Range(2, 1 << 20));
  normalize->add_option("--out", norm.out, "Output path")->required();

  std::string stats_in;
  auto* stats = app.add_subcommand("stats", "Degree, overlap and cover statistics");
  stats->add_option("--in", stats_in, "Arc-family JSON")->required();

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Build and verify a box representation");
  build_cmd->add_option("--in", build.in, "Arc-family JSON")->required();
  build_cmd->add_option("--method", build.method, "interval|degree|overlap|cover|auto");
  build_cmd->add_option("--alpha", build.alpha, "Dimensions for --method degree");
  build_cmd->add_option("--out", build.out, "BoxRep output path")->required();

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Check a representation against a family or graph");
  verify->add_option("--rep", ver.rep, "BoxRep JSON")->required();
  auto* arcs_opt = verify->add_option("--arcs", ver.arcs, "Arc-family JSON");
  auto* graph_opt = verify->add_option("--graph", ver.graph, "Graph JSON");
  arcs_opt->excludes(graph_opt);
  verify->require_option(2);

  std::string oracle_in;
  std::size_t max_n = 8, max_non_edges = 16;
  auto* oracle = app.add_subcommand("oracle", "Exact boxicity of a small graph");
  oracle->add_option("--in", oracle_in, "Graph JSON")->required();
  oracle->add_option("--max-n", max_n, "Largest vertex count accepted");
  oracle->add_option("--max-non-edges", max_non_edges, "Largest non-edge count accepted");

  auto* gen = app.add_subcommand("gen", "Generate arc families");
  gen->require_subcommand(1);
  std::string gen_out;
  int gen_n = 0, gen_alpha = 2, gen_extra = 0;
  std::string max_len = "1/4";
  std::uint64_t seed = 0;
  auto* roberts = gen->add_subcommand("roberts", "Complement of a perfect matching");
  roberts->add_option("--n", gen_n)->required();
  auto* tightness = gen->add_subcommand("tightness", "Extremal family for the degree bound");
  tightness->add_option("--alpha", gen_alpha)->required();
  tightness->add_option("--n", gen_n)->required();
  auto* random = gen->add_subcommand("random", "Seeded random family");
  random->add_option("--n", gen_n)->required();
  random->add_option("--max-len", max_len, "Longest arc in turns, as p/q");
  random->add_option("--seed", seed);
  random->add_option("--alpha", gen_alpha, "Normalise for this many axes");
  auto* ring = gen->add_subcommand("ring", "Ring of arcs with cover number m");
  ring->add_option("--m", gen_n)->required();
  ring->add_option("--extra", gen_extra);
  ring->add_option("--seed", seed);
  for (auto* sub : {roberts, tightness, random, ring}) sub->add_option("--out", gen_out, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadInput;
  }

  try {
    if (*normalize) return run_normalize(norm);
    if (*stats) return run_stats(stats_in);
    if (*build_cmd) return run_build(build);
    if (*verify) return run_verify(ver);
    if (*oracle) return run_oracle(oracle_in, max_n, max_non_edges);
    cag::ArcFamily f = *roberts     ? cag::gen_roberts(gen_n)
                       : *tightness ? cag::gen_tightness(gen_alpha, gen_n)
                       : *random    ? cag::gen_random(gen_n, cag::parse_fraction(max_len), seed, gen_alpha)
                                    : cag::gen_ring(gen_n, gen_extra, seed);
    write_output(gen_out, cag::json::dump_family(f));
    return kOk;
  } catch (const cag::Error& e) {
    std::cerr << "cag: " << e.what() << "\n";
    return e.kind() == cag::ErrorKind::VerificationFailed ? kVerifyFailed : kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "cag: " << e.what() << "\n";
    return kBadInput;
  }
}
