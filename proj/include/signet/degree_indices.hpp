#pragma once

#include <cstdint>
#include <vector>

#include "signet/signed_graph.hpp"

namespace signet {

constexpr std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

/// Sums of squared degrees, one field per degree kind. The mixed field sums
/// the per-vertex product d+ * d-. All values are exact integers and satisfy
///   m1_underlying == m1_pos + m1_neg + 2 * m1_mixed
///   m1_underlying == m1_net + 4 * m1_mixed
struct FirstZagrebReport {
  std::int64_t m1_pos{};
  std::int64_t m1_neg{};
  std::int64_t m1_mixed{};
  std::int64_t m1_net{};
  std::int64_t m1_underlying{};

  friend constexpr bool operator==(const FirstZagrebReport&, const FirstZagrebReport&) = default;
};

/// Per-edge products of endpoint degrees, summed over all edges. The mixed
/// field uses the symmetric product d+(u)d-(v) + d-(u)d+(v), which is the
/// convention under which
///   m2_underlying == m2_pos + m2_neg + m2_mixed
///   m2_underlying == m2_net + 2 * m2_mixed
/// hold exactly. m2_net may be negative.
struct SecondZagrebReport {
  std::int64_t m2_pos{};
  std::int64_t m2_neg{};
  std::int64_t m2_mixed{};
  std::int64_t m2_net{};
  std::int64_t m2_underlying{};

  friend constexpr bool operator==(const SecondZagrebReport&, const SecondZagrebReport&) = default;
};

/// Absolute endpoint-degree differences for one edge, per degree kind.
struct EdgeImbalance {
  VertexId u{};
  VertexId v{};
  std::int64_t imb_pos{};
  std::int64_t imb_neg{};
  std::int64_t imb_net{};
  std::int64_t imb_underlying{};

  friend constexpr bool operator==(const EdgeImbalance&, const EdgeImbalance&) = default;
};

/// irr_* sums edge imbalances; irrt_* sums absolute degree differences over
/// unordered distinct vertex pairs (arithmetically the half-sum over ordered
/// pairs, kept in integers).
struct IrregularityReport {
  std::int64_t irr_pos{};
  std::int64_t irr_neg{};
  std::int64_t irr_net{};
  std::int64_t irr_underlying{};
  std::int64_t irrt_pos{};
  std::int64_t irrt_neg{};
  std::int64_t irrt_net{};
  std::int64_t irrt_underlying{};

  friend constexpr bool operator==(const IrregularityReport&, const IrregularityReport&) = default;
};

inline FirstZagrebReport first_zagreb(const SignedGraph& graph) {
  FirstZagrebReport r;
  for (const auto& t : degrees(graph)) {
    r.m1_pos += t.pos * t.pos;
    r.m1_neg += t.neg * t.neg;
    r.m1_mixed += t.pos * t.neg;
    r.m1_net += t.net() * t.net();
    r.m1_underlying += t.underlying() * t.underlying();
  }
  return r;
}

inline SecondZagrebReport second_zagreb(const SignedGraph& graph) {
  SecondZagrebReport r;
  const auto deg = degrees(graph);
  for (const auto& e : graph.edges()) {
    const auto& a = deg[static_cast<std::size_t>(e.u)];
    const auto& b = deg[static_cast<std::size_t>(e.v)];
    r.m2_pos += a.pos * b.pos;
    r.m2_neg += a.neg * b.neg;
    r.m2_mixed += a.pos * b.neg + a.neg * b.pos;
    r.m2_net += a.net() * b.net();
    r.m2_underlying += a.underlying() * b.underlying();
  }
  return r;
}

/// One entry per edge, in canonical edge order.
inline std::vector<EdgeImbalance> edge_imbalances(const SignedGraph& graph) {
  const auto deg = degrees(graph);
  std::vector<EdgeImbalance> out;
  out.reserve(graph.edges().size());
  for (const auto& e : graph.edges()) {
    const auto& a = deg[static_cast<std::size_t>(e.u)];
    const auto& b = deg[static_cast<std::size_t>(e.v)];
    out.push_back({e.u, e.v,
                   abs64(a.pos - b.pos),
                   abs64(a.neg - b.neg),
                   abs64(a.net() - b.net()),
                   abs64(a.underlying() - b.underlying())});
  }
  return out;
}

inline IrregularityReport irregularity(const SignedGraph& graph) {
  IrregularityReport r;
  for (const auto& imb : edge_imbalances(graph)) {
    r.irr_pos += imb.imb_pos;
    r.irr_neg += imb.imb_neg;
    r.irr_net += imb.imb_net;
    r.irr_underlying += imb.imb_underlying;
  }
  const auto deg = degrees(graph);
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      r.irrt_pos += abs64(deg[u].pos - deg[v].pos);
      r.irrt_neg += abs64(deg[u].neg - deg[v].neg);
      r.irrt_net += abs64(deg[u].net() - deg[v].net());
      r.irrt_underlying += abs64(deg[u].underlying() - deg[v].underlying());
    }
  }
  return r;
}

}  // namespace signet
