#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "signet/signed_graph.hpp"

// Deterministic and seeded-random signed-graph constructors.
//
// Reproducibility contract: all randomness comes from std::mt19937_64, whose
// output sequence is fixed by the standard, and unit-interval draws take the
// top 53 bits of one engine output. Equal seeds therefore produce
// byte-identical graphs on every platform. Draw order for random graphs:
// unordered vertex pairs in lexicographic order, one presence draw per pair
// from the graph-seed engine, then one sign draw per present edge from the
// pattern-seed engine.
namespace signet::gen {

class InvalidOrderError : public Error {
 public:
  using Error::Error;
};

class ConnectivityUnreachableError : public Error {
 public:
  explicit ConnectivityUnreachableError(int attempts)
      : Error("no connected graph found after " + std::to_string(attempts) + " attempts") {}
};

/// How signs are assigned to edges, indexed by construction order.
/// Alternating gives '+' to even-indexed edges. Random draws '+' with
/// probability p_plus from its own seeded engine.
struct SignPattern {
  enum class Kind { all_plus, all_minus, alternating, random };

  Kind kind{Kind::all_plus};
  double p_plus{0.5};
  std::uint64_t seed{0};

  static SignPattern all_plus() { return {Kind::all_plus, 0.0, 0}; }
  static SignPattern all_minus() { return {Kind::all_minus, 0.0, 0}; }
  static SignPattern alternating() { return {Kind::alternating, 0.0, 0}; }
  static SignPattern random(double p_plus, std::uint64_t seed) {
    return {Kind::random, p_plus, seed};
  }
};

struct RandomGraphSpec {
  VertexId n{1};
  double edge_probability{0.5};
  SignPattern pattern{};
  std::uint64_t seed{0};
  bool require_connected{false};
};

namespace detail {

// Uniform draw in [0, 1) from the top 53 bits of one engine step.
inline double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

class SignStream {
 public:
  explicit SignStream(const SignPattern& pattern) : pattern_(pattern), rng_(pattern.seed) {
    if (pattern.kind == SignPattern::Kind::random &&
        (pattern.p_plus < 0.0 || pattern.p_plus > 1.0)) {
      throw Error("sign probability must lie in [0, 1]");
    }
  }

  Sign next() {
    switch (pattern_.kind) {
      case SignPattern::Kind::all_plus:
        return Sign::plus;
      case SignPattern::Kind::all_minus:
        return Sign::minus;
      case SignPattern::Kind::alternating:
        return (index_++ % 2 == 0) ? Sign::plus : Sign::minus;
      case SignPattern::Kind::random:
        return unit_draw(rng_) < pattern_.p_plus ? Sign::plus : Sign::minus;
    }
    return Sign::plus;
  }

 private:
  SignPattern pattern_;
  std::mt19937_64 rng_;
  std::uint64_t index_{0};
};

}  // namespace detail

/// Path v0 - v1 - ... - v(n-1); edges constructed in that order.
inline SignedGraph path(VertexId n, const SignPattern& pattern = SignPattern::all_plus()) {
  if (n < 1) {
    throw InvalidOrderError("path requires n >= 1");
  }
  detail::SignStream signs(pattern);
  std::vector<SignedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (VertexId i = 0; i + 1 < n; ++i) {
    edges.push_back({i, i + 1, signs.next()});
  }
  return SignedGraph(n, std::move(edges));
}

/// Cycle with construction order (0,1), ..., (n-2,n-1), (0,n-1).
inline SignedGraph cycle(VertexId n, const SignPattern& pattern = SignPattern::all_plus()) {
  if (n < 3) {
    throw InvalidOrderError("cycle requires n >= 3");
  }
  detail::SignStream signs(pattern);
  std::vector<SignedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (VertexId i = 0; i + 1 < n; ++i) {
    edges.push_back({i, i + 1, signs.next()});
  }
  edges.push_back({0, n - 1, signs.next()});
  return SignedGraph(n, std::move(edges));
}

/// Complete graph; edges constructed in lexicographic pair order.
inline SignedGraph complete(VertexId n, const SignPattern& pattern = SignPattern::all_plus()) {
  if (n < 1) {
    throw InvalidOrderError("complete requires n >= 1");
  }
  detail::SignStream signs(pattern);
  std::vector<SignedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      edges.push_back({u, v, signs.next()});
    }
  }
  return SignedGraph(n, std::move(edges));
}

/// Star with center 0; edges (0,1), ..., (0,n-1) in construction order.
inline SignedGraph star(VertexId n, const SignPattern& pattern = SignPattern::all_plus()) {
  if (n < 1) {
    throw InvalidOrderError("star requires n >= 1");
  }
  detail::SignStream signs(pattern);
  std::vector<SignedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (VertexId i = 1; i < n; ++i) {
    edges.push_back({0, i, signs.next()});
  }
  return SignedGraph(n, std::move(edges));
}

/// Erdos-Renyi style draw: each unordered pair is present independently with
/// spec.edge_probability. With require_connected the whole draw repeats, both
/// engines carrying their state forward, until the result is connected; gives
/// up after a fixed retry budget.
inline SignedGraph random_signed(const RandomGraphSpec& spec) {
  if (spec.n < 1) {
    throw Error("random graph requires n >= 1");
  }
  if (spec.edge_probability < 0.0 || spec.edge_probability > 1.0) {
    throw Error("edge probability must lie in [0, 1]");
  }
  constexpr int kMaxAttempts = 1000;
  std::mt19937_64 presence(spec.seed);
  detail::SignStream signs(spec.pattern);
  std::vector<SignedEdge> edges;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    edges.clear();
    for (VertexId u = 0; u < spec.n; ++u) {
      for (VertexId v = u + 1; v < spec.n; ++v) {
        if (detail::unit_draw(presence) < spec.edge_probability) {
          edges.push_back({u, v, signs.next()});
        }
      }
    }
    SignedGraph graph(spec.n, edges);
    if (!spec.require_connected || is_connected(graph)) {
      return graph;
    }
  }
  throw ConnectivityUnreachableError(kMaxAttempts);
}

}  // namespace signet::gen
