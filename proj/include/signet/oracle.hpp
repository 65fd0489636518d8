#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "signet/degree_indices.hpp"
#include "signet/distance_indices.hpp"
#include "signet/signed_graph.hpp"

// Brute-force re-derivation of every index straight from its defining
// formula, plus machine checks of the identities and inequalities that relate
// them. Nothing here reuses the degree or distance code of the main
// implementations: degrees come from per-vertex edge-list scans, distances
// from Floyd-Warshall, pair sums run over ordered pairs and are halved.
namespace signet::oracle {

struct ReferenceIndices {
  FirstZagrebReport first_zagreb;
  SecondZagrebReport second_zagreb;
  IrregularityReport irregularity;
  std::optional<SchultzReport> schultz;   // absent when disconnected
  std::optional<GutmanReport> gutman;     // absent when disconnected
};

enum class Relation { equal, less_or_equal, greater_or_equal };

constexpr const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::equal: return "=";
    case Relation::less_or_equal: return "<=";
    case Relation::greater_or_equal: return ">=";
  }
  return "?";
}

/// One theorem clause instance. Aggregated per-edge clauses carry the worst
/// edge's two sides and name it in `witness`.
struct IdentityCheck {
  std::string name;
  std::int64_t lhs{};
  std::int64_t rhs{};
  Relation relation{Relation::equal};
  bool holds{};
  std::string witness;
};

struct GraphSummary {
  VertexId n{};
  std::int64_t edges{};
  std::int64_t positive_edges{};
  std::int64_t negative_edges{};
};

struct VerificationReport {
  GraphSummary graph_summary;
  std::vector<IdentityCheck> checks;
  bool all_pass{};
};

namespace detail {

// d+ / d- of one vertex by scanning the whole edge list.
inline std::int64_t scan_degree(const SignedGraph& graph, VertexId v, Sign sign) {
  std::int64_t c = 0;
  for (const auto& e : graph.edges()) {
    if ((e.u == v || e.v == v) && e.sign == sign) ++c;
  }
  return c;
}

struct ScanDegrees {
  std::vector<std::int64_t> pos;
  std::vector<std::int64_t> neg;

  std::int64_t net(std::size_t v) const { return pos[v] - neg[v]; }
  std::int64_t underlying(std::size_t v) const { return pos[v] + neg[v]; }
};

inline ScanDegrees scan_all_degrees(const SignedGraph& graph) {
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  ScanDegrees d{std::vector<std::int64_t>(n), std::vector<std::int64_t>(n)};
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    d.pos[static_cast<std::size_t>(v)] = scan_degree(graph, v, Sign::plus);
    d.neg[static_cast<std::size_t>(v)] = scan_degree(graph, v, Sign::minus);
  }
  return d;
}

constexpr std::int32_t kUnreachable = 1'000'000'000;

// Classic Floyd-Warshall on a dense matrix; kUnreachable marks absent paths.
inline std::vector<std::int32_t> floyd_warshall(const SignedGraph& graph) {
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  std::vector<std::int32_t> d(n * n, kUnreachable);
  for (std::size_t i = 0; i < n; ++i) {
    d[i * n + i] = 0;
  }
  for (const auto& e : graph.edges()) {
    d[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = 1;
    d[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const std::int32_t* dk = d.data() + k * n;
    for (std::size_t i = 0; i < n; ++i) {
      const std::int32_t dik = d[i * n + k];
      if (dik >= kUnreachable) continue;
      std::int32_t* di = d.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) {
        const std::int32_t cand = dik + dk[j];
        if (cand < di[j]) di[j] = cand;
      }
    }
  }
  return d;
}

}  // namespace detail

/// Every index recomputed from its definition. Distance-based families are
/// present only when the underlying graph is connected.
inline ReferenceIndices reference_indices(const SignedGraph& graph) {
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  const auto deg = detail::scan_all_degrees(graph);

  ReferenceIndices out;

  for (std::size_t v = 0; v < n; ++v) {
    out.first_zagreb.m1_pos += deg.pos[v] * deg.pos[v];
    out.first_zagreb.m1_neg += deg.neg[v] * deg.neg[v];
    out.first_zagreb.m1_mixed += deg.pos[v] * deg.neg[v];
    out.first_zagreb.m1_net += deg.net(v) * deg.net(v);
    out.first_zagreb.m1_underlying += deg.underlying(v) * deg.underlying(v);
  }

  for (const auto& e : graph.edges()) {
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    out.second_zagreb.m2_pos += deg.pos[u] * deg.pos[v];
    out.second_zagreb.m2_neg += deg.neg[u] * deg.neg[v];
    out.second_zagreb.m2_mixed += deg.pos[u] * deg.neg[v] + deg.neg[u] * deg.pos[v];
    out.second_zagreb.m2_net += deg.net(u) * deg.net(v);
    out.second_zagreb.m2_underlying += deg.underlying(u) * deg.underlying(v);
  }

  for (const auto& e : graph.edges()) {
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    out.irregularity.irr_pos += abs64(deg.pos[u] - deg.pos[v]);
    out.irregularity.irr_neg += abs64(deg.neg[u] - deg.neg[v]);
    out.irregularity.irr_net += abs64(deg.net(u) - deg.net(v));
    out.irregularity.irr_underlying += abs64(deg.underlying(u) - deg.underlying(v));
  }

  // Total irregularities: the defining half-sum over ordered pairs. The
  // ordered sum is even, so the halving is exact.
  {
    std::int64_t tp = 0, tn = 0, tnet = 0, tu = 0;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        tp += abs64(deg.pos[u] - deg.pos[v]);
        tn += abs64(deg.neg[u] - deg.neg[v]);
        tnet += abs64(deg.net(u) - deg.net(v));
        tu += abs64(deg.underlying(u) - deg.underlying(v));
      }
    }
    out.irregularity.irrt_pos = tp / 2;
    out.irregularity.irrt_neg = tn / 2;
    out.irregularity.irrt_net = tnet / 2;
    out.irregularity.irrt_underlying = tu / 2;
  }

  const auto dist = detail::floyd_warshall(graph);
  bool connected = true;
  for (std::size_t i = 0; i < n * n && connected; ++i) {
    if (dist[i] >= detail::kUnreachable) connected = false;
  }

  if (connected) {
    // Schultz and Gutman sums over ordered pairs, halved; the diagonal
    // contributes nothing since d(u,u) = 0.
    SchultzReport s;
    GutmanReport g;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        const auto d = static_cast<std::int64_t>(dist[u * n + v]);
        s.s_pos += (deg.pos[u] + deg.pos[v]) * d;
        s.s_neg += (deg.neg[u] + deg.neg[v]) * d;
        s.s_net += (deg.net(u) + deg.net(v)) * d;
        s.s_underlying += (deg.underlying(u) + deg.underlying(v)) * d;
        g.g_pos += deg.pos[u] * deg.pos[v] * d;
        g.g_neg += deg.neg[u] * deg.neg[v] * d;
        g.g_mixed += (deg.pos[u] * deg.neg[v] + deg.neg[u] * deg.pos[v]) * d;
        g.g_net += deg.net(u) * deg.net(v) * d;
        g.g_underlying += deg.underlying(u) * deg.underlying(v) * d;
      }
    }
    out.schultz = SchultzReport{s.s_pos / 2, s.s_neg / 2, s.s_net / 2, s.s_underlying / 2};
    out.gutman =
        GutmanReport{g.g_pos / 2, g.g_neg / 2, g.g_mixed / 2, g.g_net / 2, g.g_underlying / 2};
  }

  return out;
}

namespace detail {

inline IdentityCheck equality(std::string name, std::int64_t lhs, std::int64_t rhs) {
  return {std::move(name), lhs, rhs, Relation::equal, lhs == rhs, {}};
}

inline IdentityCheck inequality(std::string name, std::int64_t lhs, Relation rel,
                                std::int64_t rhs) {
  const bool holds = rel == Relation::less_or_equal ? lhs <= rhs : lhs >= rhs;
  return {std::move(name), lhs, rhs, rel, holds, {}};
}

struct EdgeSides {
  VertexId u{};
  VertexId v{};
  std::int64_t lhs{};
  std::int64_t rhs{};
};

// Folds per-edge clauses into one check carrying the least-slack edge.
inline IdentityCheck aggregate_edges(std::string name, Relation rel,
                                     const std::vector<EdgeSides>& sides) {
  IdentityCheck check{std::move(name), 0, 0, rel, true, {}};
  bool first = true;
  std::int64_t worst_slack = 0;
  for (const auto& s : sides) {
    const std::int64_t slack =
        rel == Relation::less_or_equal ? s.rhs - s.lhs : s.lhs - s.rhs;
    if (first || slack < worst_slack) {
      first = false;
      worst_slack = slack;
      check.lhs = s.lhs;
      check.rhs = s.rhs;
      check.witness =
          "edge (" + std::to_string(s.u) + ", " + std::to_string(s.v) + ")";
    }
  }
  check.holds = first || worst_slack >= 0;
  return check;
}

}  // namespace detail

/// Evaluates every theorem clause on one graph. Distance-based clauses are
/// included only when the graph is connected, the net-regular remark only
/// when the graph is net-regular.
inline VerificationReport check_identities(const SignedGraph& graph) {
  const auto ref = reference_indices(graph);
  const auto deg = detail::scan_all_degrees(graph);

  VerificationReport report;
  report.graph_summary = {graph.vertex_count(), graph.edge_count(),
                          graph.positive_edge_count(), graph.negative_edge_count()};

  const auto& fz = ref.first_zagreb;
  const auto& sz = ref.second_zagreb;
  const auto& ir = ref.irregularity;
  auto& checks = report.checks;

  checks.push_back(detail::equality("thm_zagreb1_decomposition", fz.m1_underlying,
                                    fz.m1_pos + fz.m1_neg + 2 * fz.m1_mixed));
  checks.push_back(detail::equality("thm_zagreb2_decomposition", sz.m2_underlying,
                                    sz.m2_pos + sz.m2_neg + sz.m2_mixed));
  checks.push_back(
      detail::equality("thm_3_1_i", fz.m1_underlying, fz.m1_net + 4 * fz.m1_mixed));
  checks.push_back(
      detail::equality("thm_3_1_ii", sz.m2_underlying, sz.m2_net + 2 * sz.m2_mixed));

  std::vector<detail::EdgeSides> underlying_vs_split;
  std::vector<detail::EdgeSides> net_vs_split;
  for (const auto& e : graph.edges()) {
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    const std::int64_t imb_pos = abs64(deg.pos[u] - deg.pos[v]);
    const std::int64_t imb_neg = abs64(deg.neg[u] - deg.neg[v]);
    underlying_vs_split.push_back(
        {e.u, e.v, abs64(deg.underlying(u) - deg.underlying(v)), imb_pos + imb_neg});
    net_vs_split.push_back({e.u, e.v, abs64(deg.net(u) - deg.net(v)), imb_pos - imb_neg});
  }
  checks.push_back(detail::aggregate_edges("thm_2_2_i", Relation::less_or_equal,
                                           underlying_vs_split));
  checks.push_back(detail::inequality("thm_2_2_ii", ir.irr_underlying,
                                      Relation::less_or_equal, ir.irr_pos + ir.irr_neg));
  checks.push_back(detail::inequality("thm_2_2_iii", ir.irrt_underlying,
                                      Relation::less_or_equal, ir.irrt_pos + ir.irrt_neg));
  checks.push_back(
      detail::aggregate_edges("thm_3_2_i", Relation::greater_or_equal, net_vs_split));
  checks.push_back(detail::inequality("thm_3_2_ii", ir.irr_net,
                                      Relation::greater_or_equal, ir.irr_pos - ir.irr_neg));
  checks.push_back(detail::inequality("thm_3_2_iii", ir.irrt_net,
                                      Relation::greater_or_equal,
                                      ir.irrt_pos - ir.irrt_neg));

  bool net_regular = graph.vertex_count() > 0;
  for (std::size_t v = 1; v < deg.pos.size(); ++v) {
    if (deg.net(v) != deg.net(0)) {
      net_regular = false;
      break;
    }
  }
  if (net_regular) {
    checks.push_back(detail::equality("remark_net_regular_irr_zero",
                                      ir.irr_net + ir.irrt_net, 0));
  }

  if (ref.schultz && ref.gutman) {
    const auto& s = *ref.schultz;
    const auto& g = *ref.gutman;
    checks.push_back(detail::equality("thm_4_1", s.s_underlying, s.s_pos + s.s_neg));
    checks.push_back(detail::equality("thm_4_2", s.s_net, s.s_pos - s.s_neg));
    checks.push_back(
        detail::equality("remark_schultz_sum", s.s_underlying + s.s_net, 2 * s.s_pos));
    checks.push_back(
        detail::equality("thm_5_1", g.g_underlying, g.g_pos + g.g_neg + g.g_mixed));
    checks.push_back(
        detail::equality("thm_5_2", g.g_net, g.g_pos + g.g_neg - g.g_mixed));
  }

  report.all_pass = true;
  for (const auto& c : checks) {
    if (!c.holds) {
      report.all_pass = false;
      break;
    }
  }
  return report;
}

}  // namespace signet::oracle
