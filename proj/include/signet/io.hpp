#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "signet/degree_indices.hpp"
#include "signet/distance_indices.hpp"
#include "signet/oracle.hpp"
#include "signet/signed_graph.hpp"

// The .sgl text format and machine-readable report output.
//
// An .sgl document is line oriented (LF or CRLF). Blank lines and lines whose
// first non-space character is '#' are ignored. The first significant line is
// a single non-negative integer, the vertex count; every later significant
// line is "u v s" with base-10 vertex ids and s one of "+" or "-". Parsing
// feeds the records through SignedGraph construction, so the structural rules
// (no loops, no duplicate pairs, ids in range) are enforced with 1-based line
// numbers attached.
namespace signet::io {

enum class Format { json, csv };

class CsvUnsupportedError : public Error {
 public:
  CsvUnsupportedError() : Error("verification reports cannot be rendered as csv") {}
};

class ParseError : public Error {
 public:
  enum class Kind {
    missing_header,
    malformed_record,
    bad_sign_token,
    loop_edge,
    duplicate_edge,
    vertex_out_of_range,
  };

  ParseError(Kind kind, int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        kind(kind),
        line(line) {}

  Kind kind;
  int line;  // 1-based; 0 when no line applies
};

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

inline std::optional<std::int64_t> parse_nonnegative(std::string_view token) {
  if (token.empty() || token.size() > 18) return std::nullopt;
  std::int64_t value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return value;
}

template <class Fn>
inline void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t start = 0;
  int line_no = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = nl == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line, ++line_no);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
}

}  // namespace detail

inline SignedGraph parse_sgl(std::string_view text) {
  bool have_header = false;
  VertexId n = 0;
  std::vector<SignedEdge> edges;
  std::set<std::pair<VertexId, VertexId>> seen;

  detail::for_each_line(text, [&](std::string_view line, int line_no) {
    const auto tokens = detail::split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      return;
    }
    if (!have_header) {
      const auto value = detail::parse_nonnegative(tokens.front());
      if (tokens.size() != 1 || !value) {
        throw ParseError(ParseError::Kind::missing_header, line_no,
                         "expected a vertex-count header before edge records");
      }
      if (*value > std::numeric_limits<VertexId>::max()) {
        throw ParseError(ParseError::Kind::missing_header, line_no,
                         "vertex count out of range");
      }
      n = static_cast<VertexId>(*value);
      have_header = true;
      return;
    }
    if (tokens.size() != 3) {
      throw ParseError(ParseError::Kind::malformed_record, line_no,
                       "expected an edge record 'u v s'");
    }
    const auto u = detail::parse_nonnegative(tokens[0]);
    const auto v = detail::parse_nonnegative(tokens[1]);
    if (!u || !v) {
      throw ParseError(ParseError::Kind::malformed_record, line_no,
                       "vertex ids must be non-negative base-10 integers");
    }
    Sign sign;
    if (tokens[2] == "+") {
      sign = Sign::plus;
    } else if (tokens[2] == "-") {
      sign = Sign::minus;
    } else {
      throw ParseError(ParseError::Kind::bad_sign_token, line_no,
                       "bad sign token '" + std::string(tokens[2]) + "'");
    }
    if (*u >= n || *v >= n) {
      throw ParseError(ParseError::Kind::vertex_out_of_range, line_no,
                       "vertex " + std::to_string(*u >= n ? *u : *v) +
                           " out of range for a graph on " + std::to_string(n) +
                           " vertices");
    }
    if (*u == *v) {
      throw ParseError(ParseError::Kind::loop_edge, line_no,
                       "loop edge at vertex " + std::to_string(*u));
    }
    const auto a = static_cast<VertexId>(*u);
    const auto b = static_cast<VertexId>(*v);
    const auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      throw ParseError(ParseError::Kind::duplicate_edge, line_no,
                       "duplicate edge (" + std::to_string(key.first) + ", " +
                           std::to_string(key.second) + ")");
    }
    edges.push_back({a, b, sign});
  });

  if (!have_header) {
    throw ParseError(ParseError::Kind::missing_header, 0, "missing header line");
  }
  return SignedGraph(n, std::move(edges));
}

/// Canonical serialization: header, then sorted edges, single spaces, LF
/// endings, trailing LF. parse_sgl(write_sgl(g)) == g.
inline std::string write_sgl(const SignedGraph& graph) {
  std::string out = std::to_string(graph.vertex_count()) + "\n";
  for (const auto& e : graph.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += ' ';
    out += sign_char(e.sign);
    out += '\n';
  }
  return out;
}

namespace detail {

template <class Report>
struct ReportTraits;

template <>
struct ReportTraits<FirstZagrebReport> {
  static constexpr std::array<const char*, 5> names{"m1_pos", "m1_neg", "m1_mixed", "m1_net",
                                                    "m1_underlying"};
  static std::array<std::int64_t, 5> values(const FirstZagrebReport& r) {
    return {r.m1_pos, r.m1_neg, r.m1_mixed, r.m1_net, r.m1_underlying};
  }
};

template <>
struct ReportTraits<SecondZagrebReport> {
  static constexpr std::array<const char*, 5> names{"m2_pos", "m2_neg", "m2_mixed", "m2_net",
                                                    "m2_underlying"};
  static std::array<std::int64_t, 5> values(const SecondZagrebReport& r) {
    return {r.m2_pos, r.m2_neg, r.m2_mixed, r.m2_net, r.m2_underlying};
  }
};

template <>
struct ReportTraits<IrregularityReport> {
  static constexpr std::array<const char*, 8> names{"irr_pos",  "irr_neg",  "irr_net",
                                                    "irr_underlying", "irrt_pos", "irrt_neg",
                                                    "irrt_net", "irrt_underlying"};
  static std::array<std::int64_t, 8> values(const IrregularityReport& r) {
    return {r.irr_pos,  r.irr_neg,  r.irr_net,  r.irr_underlying,
            r.irrt_pos, r.irrt_neg, r.irrt_net, r.irrt_underlying};
  }
};

template <>
struct ReportTraits<SchultzReport> {
  static constexpr std::array<const char*, 4> names{"s_pos", "s_neg", "s_net", "s_underlying"};
  static std::array<std::int64_t, 4> values(const SchultzReport& r) {
    return {r.s_pos, r.s_neg, r.s_net, r.s_underlying};
  }
};

template <>
struct ReportTraits<GutmanReport> {
  static constexpr std::array<const char*, 5> names{"g_pos", "g_neg", "g_mixed", "g_net",
                                                    "g_underlying"};
  static std::array<std::int64_t, 5> values(const GutmanReport& r) {
    return {r.g_pos, r.g_neg, r.g_mixed, r.g_net, r.g_underlying};
  }
};

template <class Report>
inline nlohmann::ordered_json flat_json(const Report& r) {
  nlohmann::ordered_json obj;
  const auto values = ReportTraits<Report>::values(r);
  for (std::size_t i = 0; i < values.size(); ++i) {
    obj[ReportTraits<Report>::names[i]] = values[i];
  }
  return obj;
}

inline void append_csv_row(std::string& out, std::span<const std::int64_t> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  out += '\n';
}

inline void append_csv_header(std::string& out, std::span<const char* const> names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ',';
    out += names[i];
  }
  out += '\n';
}

}  // namespace detail

/// Flat object/row of the report's fields. JSON text carries no trailing
/// newline; CSV ends each row with LF.
template <class Report>
inline std::string report_serialize(const Report& report, Format format) {
  if (format == Format::json) {
    return detail::flat_json(report).dump(2);
  }
  std::string out;
  detail::append_csv_header(out, detail::ReportTraits<Report>::names);
  detail::append_csv_row(out, detail::ReportTraits<Report>::values(report));
  return out;
}

/// Several reports of one kind: a JSON array, or CSV with one row per report
/// (header row only when the list is empty).
template <class Report>
inline std::string report_serialize(std::span<const Report> reports, Format format) {
  if (format == Format::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      arr.push_back(detail::flat_json(r));
    }
    return arr.dump(2);
  }
  std::string out;
  detail::append_csv_header(out, detail::ReportTraits<Report>::names);
  for (const auto& r : reports) {
    detail::append_csv_row(out, detail::ReportTraits<Report>::values(r));
  }
  return out;
}

/// The index families computed for one graph; absent members are omitted from
/// the output.
struct ReportBundle {
  std::optional<FirstZagrebReport> first_zagreb;
  std::optional<SecondZagrebReport> second_zagreb;
  std::optional<IrregularityReport> irregularity;
  std::optional<SchultzReport> schultz;
  std::optional<GutmanReport> gutman;
};

inline std::string report_serialize(const ReportBundle& bundle, Format format) {
  if (format == Format::json) {
    nlohmann::ordered_json root = nlohmann::ordered_json::object();
    if (bundle.first_zagreb) root["first_zagreb"] = detail::flat_json(*bundle.first_zagreb);
    if (bundle.second_zagreb) root["second_zagreb"] = detail::flat_json(*bundle.second_zagreb);
    if (bundle.irregularity) root["irregularity"] = detail::flat_json(*bundle.irregularity);
    if (bundle.schultz) root["schultz"] = detail::flat_json(*bundle.schultz);
    if (bundle.gutman) root["gutman"] = detail::flat_json(*bundle.gutman);
    return root.dump(2);
  }
  std::vector<const char*> names;
  std::vector<std::int64_t> values;
  auto add = [&](const auto& opt) {
    if (!opt) return;
    using Report = std::decay_t<decltype(*opt)>;
    const auto vs = detail::ReportTraits<Report>::values(*opt);
    names.insert(names.end(), detail::ReportTraits<Report>::names.begin(),
                 detail::ReportTraits<Report>::names.end());
    values.insert(values.end(), vs.begin(), vs.end());
  };
  add(bundle.first_zagreb);
  add(bundle.second_zagreb);
  add(bundle.irregularity);
  add(bundle.schultz);
  add(bundle.gutman);
  std::string out;
  detail::append_csv_header(out, names);
  detail::append_csv_row(out, values);
  return out;
}

/// JSON only; CSV cannot express the nested check list.
inline std::string report_serialize(const oracle::VerificationReport& report, Format format) {
  if (format == Format::csv) {
    throw CsvUnsupportedError();
  }
  nlohmann::ordered_json root;
  root["graph_summary"] = {{"n", report.graph_summary.n},
                           {"edges", report.graph_summary.edges},
                           {"positive_edges", report.graph_summary.positive_edges},
                           {"negative_edges", report.graph_summary.negative_edges}};
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json check;
    check["name"] = c.name;
    check["lhs"] = c.lhs;
    check["rhs"] = c.rhs;
    check["relation"] = oracle::relation_symbol(c.relation);
    check["holds"] = c.holds;
    if (!c.witness.empty()) check["witness"] = c.witness;
    checks.push_back(std::move(check));
  }
  root["checks"] = std::move(checks);
  root["all_pass"] = report.all_pass;
  return root.dump(2);
}

}  // namespace signet::io
