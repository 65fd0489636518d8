#pragma once

#include <cstdint>
#include <vector>

#include "signet/degree_indices.hpp"
#include "signet/signed_graph.hpp"

namespace signet {

class DisconnectedGraphError : public Error {
 public:
  DisconnectedGraphError()
      : Error("graph is not connected; distance-based indices are undefined") {}
};

/// All-pairs hop counts of the underlying graph, row-major.
struct DistanceMatrix {
  VertexId n{};
  std::vector<std::int32_t> hops;

  std::int32_t at(VertexId u, VertexId v) const {
    return hops[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(v)];
  }
};

/// Degree-sum-times-distance totals over unordered distinct vertex pairs.
/// Exact identities: s_underlying == s_pos + s_neg and s_net == s_pos - s_neg.
struct SchultzReport {
  std::int64_t s_pos{};
  std::int64_t s_neg{};
  std::int64_t s_net{};
  std::int64_t s_underlying{};

  friend constexpr bool operator==(const SchultzReport&, const SchultzReport&) = default;
};

/// Degree-product-times-distance totals over unordered distinct vertex pairs.
/// The mixed field uses the symmetric product d+(u)d-(v) + d-(u)d+(v); with it
/// g_underlying == g_pos + g_neg + g_mixed and g_net == g_pos + g_neg - g_mixed
/// hold exactly. g_net may be negative.
struct GutmanReport {
  std::int64_t g_pos{};
  std::int64_t g_neg{};
  std::int64_t g_mixed{};
  std::int64_t g_net{};
  std::int64_t g_underlying{};

  friend constexpr bool operator==(const GutmanReport&, const GutmanReport&) = default;
};

/// Breadth-first distances from every source. Throws DisconnectedGraphError
/// when the underlying graph is not connected.
inline DistanceMatrix all_pairs_distances(const SignedGraph& graph) {
  const VertexId n = graph.vertex_count();
  const auto adj = adjacency_lists(graph);
  DistanceMatrix m{n, std::vector<std::int32_t>(
                          static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1)};
  std::vector<VertexId> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (VertexId src = 0; src < n; ++src) {
    auto* row = m.hops.data() + static_cast<std::size_t>(src) * static_cast<std::size_t>(n);
    queue.clear();
    queue.push_back(src);
    row[src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId u = queue[head];
      const std::int32_t next = row[u] + 1;
      for (const VertexId w : adj[static_cast<std::size_t>(u)]) {
        if (row[w] < 0) {
          row[w] = next;
          queue.push_back(w);
        }
      }
    }
    if (static_cast<VertexId>(queue.size()) != n) {
      throw DisconnectedGraphError();
    }
  }
  return m;
}

inline SchultzReport schultz(const SignedGraph& graph, const DistanceMatrix& dist) {
  SchultzReport r;
  const auto deg = degrees(graph);
  const VertexId n = graph.vertex_count();
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const auto d = static_cast<std::int64_t>(dist.at(u, v));
      const auto& a = deg[static_cast<std::size_t>(u)];
      const auto& b = deg[static_cast<std::size_t>(v)];
      r.s_pos += (a.pos + b.pos) * d;
      r.s_neg += (a.neg + b.neg) * d;
      r.s_net += (a.net() + b.net()) * d;
      r.s_underlying += (a.underlying() + b.underlying()) * d;
    }
  }
  return r;
}

inline SchultzReport schultz(const SignedGraph& graph) {
  return schultz(graph, all_pairs_distances(graph));
}

inline GutmanReport gutman(const SignedGraph& graph, const DistanceMatrix& dist) {
  GutmanReport r;
  const auto deg = degrees(graph);
  const VertexId n = graph.vertex_count();
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const auto d = static_cast<std::int64_t>(dist.at(u, v));
      const auto& a = deg[static_cast<std::size_t>(u)];
      const auto& b = deg[static_cast<std::size_t>(v)];
      r.g_pos += a.pos * b.pos * d;
      r.g_neg += a.neg * b.neg * d;
      r.g_mixed += (a.pos * b.neg + a.neg * b.pos) * d;
      r.g_net += a.net() * b.net() * d;
      r.g_underlying += a.underlying() * b.underlying() * d;
    }
  }
  return r;
}

inline GutmanReport gutman(const SignedGraph& graph) {
  return gutman(graph, all_pairs_distances(graph));
}

}  // namespace signet
