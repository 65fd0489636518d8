#pragma once

// Shared helpers for the unit and acceptance suites: small fixture graphs,
// exhaustive and seeded corpora, and a runner for the command-line tool.

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include <signet/signet.hpp>

namespace testsupport {

// Path v0 - v1 - v2 with signs +, -.
inline signet::SignedGraph p3_pm() {
  return signet::SignedGraph(
      3, {{0, 1, signet::Sign::plus}, {1, 2, signet::Sign::minus}});
}

inline signet::SignedGraph c4_alternating() {
  return signet::gen::cycle(4, signet::gen::SignPattern::alternating());
}

inline signet::SignedGraph k3_all_plus() {
  return signet::gen::complete(3, signet::gen::SignPattern::all_plus());
}

inline signet::SignedGraph two_disjoint_edges() {
  return signet::SignedGraph(
      4, {{0, 1, signet::Sign::plus}, {2, 3, signet::Sign::plus}});
}

/// Every signed graph on n vertices: each unordered pair is absent, positive,
/// or negative (3^(n choose 2) graphs).
inline std::vector<signet::SignedGraph> all_signed_graphs(signet::VertexId n) {
  std::vector<std::pair<signet::VertexId, signet::VertexId>> pairs;
  for (signet::VertexId u = 0; u < n; ++u) {
    for (signet::VertexId v = u + 1; v < n; ++v) {
      pairs.emplace_back(u, v);
    }
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;

  std::vector<signet::SignedGraph> graphs;
  graphs.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<signet::SignedEdge> edges;
    std::size_t rest = code;
    for (const auto& [u, v] : pairs) {
      const auto digit = rest % 3;
      rest /= 3;
      if (digit == 1) {
        edges.push_back({u, v, signet::Sign::plus});
      } else if (digit == 2) {
        edges.push_back({u, v, signet::Sign::minus});
      }
    }
    graphs.emplace_back(n, std::move(edges));
  }
  return graphs;
}

/// Seeded connected random graphs with 5 <= n <= 12 and mixed signs.
inline std::vector<signet::SignedGraph> random_connected_corpus(int count,
                                                                std::uint64_t seed_base = 1000) {
  std::vector<signet::SignedGraph> graphs;
  graphs.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const auto n = static_cast<signet::VertexId>(5 + i % 8);
    const double p = 0.35 + 0.15 * static_cast<double>(i % 4);
    const std::uint64_t seed = seed_base + static_cast<std::uint64_t>(i);
    graphs.push_back(signet::gen::random_signed(
        {n, p, signet::gen::SignPattern::random(0.5, seed), seed, true}));
  }
  return graphs;
}

/// Seeded random graphs allowed to be disconnected (sparse draws).
inline std::vector<signet::SignedGraph> random_corpus(int count, std::uint64_t seed_base = 9000) {
  std::vector<signet::SignedGraph> graphs;
  graphs.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const auto n = static_cast<signet::VertexId>(2 + i % 11);
    const double p = 0.05 + 0.09 * static_cast<double>(i % 9);
    const std::uint64_t seed = seed_base + static_cast<std::uint64_t>(i);
    graphs.push_back(signet::gen::random_signed(
        {n, p, signet::gen::SignPattern::random(0.4, seed), seed, false}));
  }
  return graphs;
}

inline std::filesystem::path scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("signet-tests-" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

inline std::filesystem::path unique_path(const std::string& stem) {
  static std::atomic<int> counter{0};
  return scratch_dir() / (stem + "-" + std::to_string(counter++));
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

/// Runs the built CLI with the given argument string, capturing both streams.
/// `env_prefix` (e.g. "SIGNET_SEED=42 ") is prepended to the command.
inline CliResult run_cli(const std::string& args, const std::string& env_prefix = {}) {
  const auto out_path = unique_path("out");
  const auto err_path = unique_path("err");
  const std::string command = env_prefix + std::string(SIGNET_CLI_PATH) + " " + args +
                              " >" + out_path.string() + " 2>" + err_path.string();
  const int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return result;
}

}  // namespace testsupport
