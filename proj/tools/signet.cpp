// Command-line front end: compute indices of .sgl graphs, generate graph
// families, verify the index identities, and canonicalize files.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <signet/signet.hpp>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw signet::Error("cannot open input file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& from_flag) {
  if (from_flag) {
    return *from_flag;
  }
  if (const char* env = std::getenv("SIGNET_SEED")) {
    const std::string text(env);
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
      throw signet::Error("SIGNET_SEED must be a non-negative base-10 integer");
    }
    try {
      return std::stoull(text);
    } catch (const std::exception&) {
      throw signet::Error("SIGNET_SEED is out of range");
    }
  }
  return 0;
}

signet::gen::SignPattern parse_pattern(const std::string& text, std::uint64_t seed) {
  using signet::gen::SignPattern;
  if (text == "all-plus") return SignPattern::all_plus();
  if (text == "all-minus") return SignPattern::all_minus();
  if (text == "alternating") return SignPattern::alternating();
  if (text.rfind("random:", 0) == 0) {
    double p = 0.0;
    try {
      std::size_t used = 0;
      p = std::stod(text.substr(7), &used);
      if (used != text.size() - 7) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw signet::Error("bad sign pattern '" + text + "'; expected random:<p_plus>");
    }
    return SignPattern::random(p, seed);
  }
  throw signet::Error("unknown sign pattern '" + text +
                      "'; expected all-plus, all-minus, alternating, or random:<p_plus>");
}

struct ComputeOptions {
  std::string input;
  std::vector<std::string> indices{"all"};
  std::string format{"json"};
};

int run_compute(const ComputeOptions& opt) {
  const auto graph = signet::io::parse_sgl(read_file(opt.input));
  std::set<std::string> want(opt.indices.begin(), opt.indices.end());
  if (want.contains("all")) {
    want = {"zagreb1", "zagreb2", "irregularity", "schultz", "gutman"};
  }

  signet::io::ReportBundle bundle;
  if (want.contains("zagreb1")) bundle.first_zagreb = signet::first_zagreb(graph);
  if (want.contains("zagreb2")) bundle.second_zagreb = signet::second_zagreb(graph);
  if (want.contains("irregularity")) bundle.irregularity = signet::irregularity(graph);

  bool distance_unavailable = false;
  if (want.contains("schultz") || want.contains("gutman")) {
    if (signet::is_connected(graph)) {
      const auto dist = signet::all_pairs_distances(graph);
      if (want.contains("schultz")) bundle.schultz = signet::schultz(graph, dist);
      if (want.contains("gutman")) bundle.gutman = signet::gutman(graph, dist);
    } else {
      distance_unavailable = true;
    }
  }

  const auto format =
      opt.format == "csv" ? signet::io::Format::csv : signet::io::Format::json;
  std::cout << signet::io::report_serialize(bundle, format);
  if (format == signet::io::Format::json) std::cout << "\n";

  if (distance_unavailable) {
    std::cerr << "error: graph is not connected; schultz/gutman indices are undefined\n";
    return 2;
  }
  return 0;
}

struct GenerateOptions {
  std::string family;
  signet::VertexId n = 1;
  double edge_probability = 0.5;
  std::string pattern{"all-plus"};
  std::optional<std::uint64_t> seed;
  bool require_connected = false;
};

int run_generate(const GenerateOptions& opt) {
  const std::uint64_t seed = resolve_seed(opt.seed);
  const auto pattern = parse_pattern(opt.pattern, seed);

  signet::SignedGraph graph = [&] {
    if (opt.family == "path") return signet::gen::path(opt.n, pattern);
    if (opt.family == "cycle") return signet::gen::cycle(opt.n, pattern);
    if (opt.family == "complete") return signet::gen::complete(opt.n, pattern);
    if (opt.family == "star") return signet::gen::star(opt.n, pattern);
    return signet::gen::random_signed(
        {opt.n, opt.edge_probability, pattern, seed, opt.require_connected});
  }();

  std::cout << signet::io::write_sgl(graph);
  return 0;
}

int run_verify(const std::string& input) {
  const auto graph = signet::io::parse_sgl(read_file(input));
  const auto report = signet::oracle::check_identities(graph);
  std::cout << signet::io::report_serialize(report, signet::io::Format::json) << "\n";
  if (!report.all_pass) {
    std::cerr << "error: " << [&] {
      int failed = 0;
      for (const auto& c : report.checks) failed += c.holds ? 0 : 1;
      return std::to_string(failed);
    }() << " identity check(s) failed\n";
    return 3;
  }
  return 0;
}

int run_convert(const std::string& input) {
  std::cout << signet::io::write_sgl(signet::io::parse_sgl(read_file(input)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological indices of signed graphs"};
  app.require_subcommand(1);
  app.footer("Seeds default to the SIGNET_SEED environment variable, then 0.\n"
             "Exit codes: 0 ok, 1 usage/parse error, 2 distance indices on a\n"
             "disconnected graph, 3 failed identity checks.");

  ComputeOptions compute_opt;
  auto* compute = app.add_subcommand("compute", "Compute index reports for an .sgl file");
  compute->add_option("input", compute_opt.input, ".sgl input file")->required();
  compute->add_option("--indices", compute_opt.indices, "index families (default: all)")
      ->delimiter(',')
      ->check(CLI::IsMember({"zagreb1", "zagreb2", "irregularity", "schultz", "gutman", "all"}));
  compute->add_option("--format", compute_opt.format, "output format (default: json)")
      ->check(CLI::IsMember({"json", "csv"}));

  GenerateOptions gen_opt;
  auto* generate = app.add_subcommand("generate", "Emit a generated graph as canonical .sgl");
  generate->add_option("family", gen_opt.family, "graph family")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete", "star", "random"}));
  generate->add_option("--n", gen_opt.n, "vertex count")->required();
  generate->add_option("--p", gen_opt.edge_probability,
                       "edge probability (random family only, default: 0.5)");
  generate->add_option("--pattern", gen_opt.pattern,
                       "sign pattern: all-plus, all-minus, alternating, random:<p_plus>");
  generate->add_option("--seed", gen_opt.seed, "PRNG seed");
  generate->add_flag("--connected", gen_opt.require_connected,
                     "redraw until connected (random family only)");

  std::string verify_input;
  std::string verify_format{"json"};
  auto* verify = app.add_subcommand("verify", "Check every index identity on an .sgl file");
  verify->add_option("input", verify_input, ".sgl input file")->required();
  verify->add_option("--format", verify_format, "output format (json only)")
      ->check(CLI::IsMember({"json"}));

  std::string convert_input;
  auto* convert = app.add_subcommand("convert", "Canonicalize an .sgl file");
  convert->add_option("input", convert_input, ".sgl input file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (compute->parsed()) return run_compute(compute_opt);
    if (generate->parsed()) return run_generate(gen_opt);
    if (verify->parsed()) return run_verify(verify_input);
    if (convert->parsed()) return run_convert(convert_input);
  } catch (const signet::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
