#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace signet {

using VertexId = std::int32_t;

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LoopEdgeError : public Error {
 public:
  explicit LoopEdgeError(VertexId u)
      : Error("loop edge at vertex " + std::to_string(u)), vertex(u) {}

  VertexId vertex;
};

class DuplicateEdgeError : public Error {
 public:
  DuplicateEdgeError(VertexId u, VertexId v)
      : Error("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")"),
        u(u),
        v(v) {}

  VertexId u;
  VertexId v;
};

class VertexOutOfRangeError : public Error {
 public:
  VertexOutOfRangeError(VertexId id, VertexId vertex_count)
      : Error("vertex " + std::to_string(id) + " out of range for a graph on " +
              std::to_string(vertex_count) + " vertices"),
        vertex(id),
        vertex_count(vertex_count) {}

  VertexId vertex;
  VertexId vertex_count;
};

/// Edge sign. Every edge carries exactly one of the two values.
enum class Sign : std::uint8_t { plus, minus };

constexpr Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

constexpr char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

struct SignedEdge {
  VertexId u{};
  VertexId v{};
  Sign sign{Sign::plus};

  friend constexpr auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

/// Per-vertex degree split by edge sign; net() = d+ - d- and
/// underlying() = d+ + d- are the derived combinations.
struct DegreeTriple {
  std::int64_t pos{};
  std::int64_t neg{};

  constexpr std::int64_t net() const { return pos - neg; }
  constexpr std::int64_t underlying() const { return pos + neg; }

  friend constexpr bool operator==(const DegreeTriple&, const DegreeTriple&) = default;
};

/// Immutable simple undirected graph with a sign on every edge.
///
/// Vertices are dense ids 0..n-1; isolated vertices are representable since
/// the vertex count is independent of the edge list. Edges are stored
/// canonically (endpoints ordered u < v, list sorted lexicographically), so
/// two graphs built from the same edge set in any input order compare equal.
///
/// Construction validates: loops and out-of-range endpoints are rejected, and
/// a vertex pair may carry at most one edge. A pair listed with both signs is
/// a duplicate, not a merge.
class SignedGraph {
 public:
  SignedGraph(VertexId vertex_count, std::vector<SignedEdge> edges)
      : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) {
      throw Error("vertex count must be non-negative");
    }
    for (auto& e : edges_) {
      if (e.u < 0 || e.u >= n_) {
        throw VertexOutOfRangeError(e.u, n_);
      }
      if (e.v < 0 || e.v >= n_) {
        throw VertexOutOfRangeError(e.v, n_);
      }
      if (e.u == e.v) {
        throw LoopEdgeError(e.u);
      }
      if (e.u > e.v) {
        std::swap(e.u, e.v);
      }
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i) {
      if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) {
        throw DuplicateEdgeError(edges_[i].u, edges_[i].v);
      }
    }
  }

  VertexId vertex_count() const { return n_; }

  /// Canonically ordered edge list.
  const std::vector<SignedEdge>& edges() const { return edges_; }

  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

  std::int64_t positive_edge_count() const {
    std::int64_t c = 0;
    for (const auto& e : edges_) {
      if (e.sign == Sign::plus) ++c;
    }
    return c;
  }

  std::int64_t negative_edge_count() const { return edge_count() - positive_edge_count(); }

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  VertexId n_;
  std::vector<SignedEdge> edges_;
};

/// Degree triples for all vertices, indexed by vertex id.
inline std::vector<DegreeTriple> degrees(const SignedGraph& graph) {
  std::vector<DegreeTriple> out(static_cast<std::size_t>(graph.vertex_count()));
  for (const auto& e : graph.edges()) {
    if (e.sign == Sign::plus) {
      ++out[static_cast<std::size_t>(e.u)].pos;
      ++out[static_cast<std::size_t>(e.v)].pos;
    } else {
      ++out[static_cast<std::size_t>(e.u)].neg;
      ++out[static_cast<std::size_t>(e.v)].neg;
    }
  }
  return out;
}

/// Degree of v in the sign-forgetting graph.
inline std::int64_t underlying_degree(const SignedGraph& graph, VertexId v) {
  if (v < 0 || v >= graph.vertex_count()) {
    throw VertexOutOfRangeError(v, graph.vertex_count());
  }
  std::int64_t d = 0;
  for (const auto& e : graph.edges()) {
    if (e.u == v || e.v == v) ++d;
  }
  return d;
}

/// The common net-degree when every vertex has the same one, otherwise empty.
inline std::optional<std::int64_t> is_net_regular(const SignedGraph& graph) {
  if (graph.vertex_count() == 0) {
    return std::nullopt;
  }
  const auto deg = degrees(graph);
  const std::int64_t net = deg.front().net();
  for (const auto& t : deg) {
    if (t.net() != net) return std::nullopt;
  }
  return net;
}

/// Sign-forgetting adjacency lists, indexed by vertex id.
inline std::vector<std::vector<VertexId>> adjacency_lists(const SignedGraph& graph) {
  std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(graph.vertex_count()));
  for (const auto& e : graph.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return adj;
}

/// True iff the underlying graph is connected. A single vertex counts as
/// connected; signs are ignored.
inline bool is_connected(const SignedGraph& graph) {
  const VertexId n = graph.vertex_count();
  if (n <= 1) {
    return true;
  }
  const auto adj = adjacency_lists(graph);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> frontier{0};
  seen[0] = 1;
  VertexId reached = 1;
  while (!frontier.empty()) {
    const VertexId u = frontier.back();
    frontier.pop_back();
    for (const VertexId w : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        frontier.push_back(w);
      }
    }
  }
  return reached == n;
}

/// Copy of the graph with every edge sign flipped.
inline SignedGraph negated(const SignedGraph& graph) {
  auto edges = graph.edges();
  for (auto& e : edges) {
    e.sign = opposite(e.sign);
  }
  return SignedGraph(graph.vertex_count(), std::move(edges));
}

}  // namespace signet
