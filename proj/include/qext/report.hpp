#pragma once

// Run reports: one JSON document per run, plus a flat CSV export.
// Field names are fixed (docs/report_schema.md); unknown fields are rejected.

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qext/bounds.hpp"
#include "qext/enumeration.hpp"
#include "qext/search.hpp"
#include "qext/spectral.hpp"
#include "qext/verify.hpp"

namespace qext {

#ifdef QEXT_VERSION
inline constexpr const char* kArtifactVersion = QEXT_VERSION;
#else
inline constexpr const char* kArtifactVersion = "0.1.0";
#endif

/// q(G) of one input graph.
struct QIndexRecord {
  std::string graph6;
  double q = 0.0;
  double residual = 0.0;
  std::size_t iterations = 0;
  std::string method;
  friend bool operator==(const QIndexRecord&, const QIndexRecord&) = default;
};

/// One bound evaluated on one input graph.
struct BoundRecord {
  std::string graph6;
  BoundValue bound;
  friend bool operator==(const BoundRecord&, const BoundRecord&) = default;
};

struct ConstructionRecord {
  std::string family;
  std::map<std::string, std::int64_t> params;
  std::string graph6;
  friend bool operator==(const ConstructionRecord&, const ConstructionRecord&) = default;
};

/// Search result with the graph stored as graph6.
struct SearchRecord {
  std::size_t n = 0;
  std::vector<std::size_t> forbidden;
  std::size_t budget = 0;
  std::string best_graph6;
  double q = 0.0;
  double q_low = 0.0;
  double q_high = 0.0;
  bool feasible = false;
  std::uint64_t seed = 0;
  std::size_t restarts = 0;
  std::size_t accepted_moves = 0;
  std::optional<std::string> matched_family;
  std::vector<SearchTie> ties;
  friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

inline SearchRecord make_search_record(const SearchOptions& opt, const SearchResult& r) {
  return {opt.n,       opt.forbidden,     opt.budget,         write_graph6(r.best),
          r.q,         r.q_interval.first, r.q_interval.second, r.feasible,
          r.seed,      r.restarts,        r.accepted_moves,   r.matched_family,
          r.ties};
}

using Outcome =
    std::variant<CheckOutcome, SearchRecord, BoundRecord, QIndexRecord, ConstructionRecord, SuiteReport>;

struct RunReport {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::vector<Outcome> outcomes;
  std::string artifact_version = kArtifactVersion;
  double elapsed = 0.0;
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// 0 all hold, 1 some violation, 2 indeterminate but no violation.
inline int exit_code_for(const RunReport& r) {
  bool violated = false, indeterminate = false;
  for (const auto& o : r.outcomes) {
    if (auto* c = std::get_if<CheckOutcome>(&o)) {
      violated |= c->status == CheckStatus::violated;
      indeterminate |= c->status == CheckStatus::indeterminate;
    } else if (auto* s = std::get_if<SuiteReport>(&o)) {
      violated |= s->totals.violated > 0;
      indeterminate |= s->totals.indeterminate > 0;
    }
  }
  return violated ? 1 : indeterminate ? 2 : 0;
}

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using nlohmann::json;

inline void expect_fields(const json& j, std::initializer_list<const char*> allowed,
                          const char* what) {
  if (!j.is_object()) throw ReportError(std::string(what) + ": expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : j.items())
    if (!ok.count(key)) throw ReportError(std::string(what) + ": unknown field '" + key + "'");
  for (const auto& key : ok)
    if (!j.contains(key)) throw ReportError(std::string(what) + ": missing field '" + key + "'");
}

inline json witness_to_json(const Witness& w) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>)
          return nullptr;
        else if constexpr (std::is_same_v<T, PathWitness>)
          return json{{"type", "path"}, {"vertices", x.vertices}};
        else if constexpr (std::is_same_v<T, CycleWitness>)
          return json{{"type", "cycle"}, {"vertices", x.vertices}};
        else
          return json{{"type", "vertex_set"}, {"vertices", x.members}};
      },
      w);
}

inline Witness witness_from_json(const json& j) {
  if (j.is_null()) return {};
  expect_fields(j, {"type", "vertices"}, "witness");
  auto type = j.at("type").get<std::string>();
  auto vs = j.at("vertices").get<std::vector<Vertex>>();
  if (type == "path") return PathWitness{vs};
  if (type == "cycle") return CycleWitness{vs};
  if (type == "vertex_set") return VertexSet(vs);
  throw ReportError("witness: unknown type '" + type + "'");
}

inline json check_to_json(const CheckOutcome& c) {
  return {{"kind", "check"},
          {"statement", std::string(to_string(c.statement))},
          {"status", std::string(to_string(c.status))},
          {"lhs", c.lhs},
          {"rhs", c.rhs},
          {"witness", witness_to_json(c.witness)},
          {"note", c.note}};
}

inline CheckOutcome check_from_json(const json& j) {
  expect_fields(j, {"kind", "statement", "status", "lhs", "rhs", "witness", "note"}, "check");
  CheckOutcome c;
  auto st = parse_statement(j.at("statement").get<std::string>());
  auto status = parse_status(j.at("status").get<std::string>());
  if (!st || !status) throw ReportError("check: unknown statement or status");
  c.statement = *st;
  c.status = *status;
  c.lhs = j.at("lhs").get<double>();
  c.rhs = j.at("rhs").get<double>();
  c.witness = witness_from_json(j.at("witness"));
  c.note = j.at("note").get<std::string>();
  return c;
}

inline json counts_to_json(const StatusCounts& c) {
  return {{"instances", c.instances},
          {"holds", c.holds},
          {"equality_case", c.equality_case},
          {"violated", c.violated},
          {"precondition_unmet", c.precondition_unmet},
          {"indeterminate", c.indeterminate}};
}

inline StatusCounts counts_from_json(const json& j) {
  expect_fields(j, {"instances", "holds", "equality_case", "violated", "precondition_unmet",
                    "indeterminate"},
                "counts");
  StatusCounts c;
  c.instances = j.at("instances").get<std::size_t>();
  c.holds = j.at("holds").get<std::size_t>();
  c.equality_case = j.at("equality_case").get<std::size_t>();
  c.violated = j.at("violated").get<std::size_t>();
  c.precondition_unmet = j.at("precondition_unmet").get<std::size_t>();
  c.indeterminate = j.at("indeterminate").get<std::size_t>();
  return c;
}

inline json suite_to_json(const SuiteReport& s) {
  json stmts = json::array();
  for (auto st : s.statements) stmts.push_back(std::string(to_string(st)));
  json per = json::object();
  for (const auto& [name, c] : s.per_statement) per[name] = counts_to_json(c);
  json viol = json::array();
  for (const auto& v : s.violations)
    viol.push_back({{"statement", std::string(to_string(v.statement))},
                    {"graph6", v.graph6},
                    {"params", v.params},
                    {"outcome", check_to_json(v.outcome)}});
  return {{"kind", "suite"},
          {"statements", stmts},
          {"totals", counts_to_json(s.totals)},
          {"per_statement", per},
          {"violations", viol}};
}

inline SuiteReport suite_from_json(const json& j) {
  expect_fields(j, {"kind", "statements", "totals", "per_statement", "violations"}, "suite");
  SuiteReport s;
  for (const auto& name : j.at("statements")) {
    auto st = parse_statement(name.get<std::string>());
    if (!st) throw ReportError("suite: unknown statement");
    s.statements.push_back(*st);
  }
  s.totals = counts_from_json(j.at("totals"));
  for (const auto& [name, c] : j.at("per_statement").items()) s.per_statement[name] = counts_from_json(c);
  for (const auto& v : j.at("violations")) {
    expect_fields(v, {"statement", "graph6", "params", "outcome"}, "violation");
    auto st = parse_statement(v.at("statement").get<std::string>());
    if (!st) throw ReportError("violation: unknown statement");
    s.violations.push_back({*st, v.at("graph6").get<std::string>(), v.at("params").get<std::string>(),
                            check_from_json(v.at("outcome"))});
  }
  return s;
}

inline json outcome_to_json(const Outcome& o) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CheckOutcome>) {
          return check_to_json(x);
        } else if constexpr (std::is_same_v<T, SearchRecord>) {
          json ties = json::array();
          for (const auto& t : x.ties) ties.push_back({{"graph6", t.graph6}, {"q", t.q}});
          return {{"kind", "search"},
                  {"n", x.n},
                  {"forbidden", x.forbidden},
                  {"budget", x.budget},
                  {"best_graph6", x.best_graph6},
                  {"q", x.q},
                  {"q_low", x.q_low},
                  {"q_high", x.q_high},
                  {"feasible", x.feasible},
                  {"seed", x.seed},
                  {"restarts", x.restarts},
                  {"accepted_moves", x.accepted_moves},
                  {"matched_family", x.matched_family ? json(*x.matched_family) : json(nullptr)},
                  {"ties", ties}};
        } else if constexpr (std::is_same_v<T, BoundRecord>) {
          return {{"kind", "bound"},
                  {"graph6", x.graph6},
                  {"name", x.bound.name},
                  {"value", x.bound.value},
                  {"relation", std::string(to_string(x.bound.relation))}};
        } else if constexpr (std::is_same_v<T, QIndexRecord>) {
          return {{"kind", "qindex"},     {"graph6", x.graph6},         {"q", x.q},
                  {"residual", x.residual}, {"iterations", x.iterations}, {"method", x.method}};
        } else if constexpr (std::is_same_v<T, ConstructionRecord>) {
          return {{"kind", "construction"}, {"family", x.family}, {"params", x.params},
                  {"graph6", x.graph6}};
        } else {
          return suite_to_json(x);
        }
      },
      o);
}

inline BoundRelation parse_relation(const std::string& s) {
  for (auto r : {BoundRelation::upper_bound_on_q, BoundRelation::edge_count_bound,
                 BoundRelation::sandwich_pair})
    if (to_string(r) == s) return r;
  throw ReportError("bound: unknown relation '" + s + "'");
}

inline Outcome outcome_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ReportError("outcome: missing kind");
  auto kind = j.at("kind").get<std::string>();
  if (kind == "check") return check_from_json(j);
  if (kind == "suite") return suite_from_json(j);
  if (kind == "search") {
    expect_fields(j, {"kind", "n", "forbidden", "budget", "best_graph6", "q", "q_low", "q_high",
                      "feasible", "seed", "restarts", "accepted_moves", "matched_family", "ties"},
                  "search");
    SearchRecord s;
    s.n = j.at("n").get<std::size_t>();
    s.forbidden = j.at("forbidden").get<std::vector<std::size_t>>();
    s.budget = j.at("budget").get<std::size_t>();
    s.best_graph6 = j.at("best_graph6").get<std::string>();
    s.q = j.at("q").get<double>();
    s.q_low = j.at("q_low").get<double>();
    s.q_high = j.at("q_high").get<double>();
    s.feasible = j.at("feasible").get<bool>();
    s.seed = j.at("seed").get<std::uint64_t>();
    s.restarts = j.at("restarts").get<std::size_t>();
    s.accepted_moves = j.at("accepted_moves").get<std::size_t>();
    if (!j.at("matched_family").is_null()) s.matched_family = j.at("matched_family").get<std::string>();
    for (const auto& t : j.at("ties")) {
      expect_fields(t, {"graph6", "q"}, "tie");
      s.ties.push_back({t.at("graph6").get<std::string>(), t.at("q").get<double>()});
    }
    return s;
  }
  if (kind == "bound") {
    expect_fields(j, {"kind", "graph6", "name", "value", "relation"}, "bound");
    return BoundRecord{j.at("graph6").get<std::string>(),
                       {j.at("name").get<std::string>(), j.at("value").get<double>(),
                        parse_relation(j.at("relation").get<std::string>())}};
  }
  if (kind == "qindex") {
    expect_fields(j, {"kind", "graph6", "q", "residual", "iterations", "method"}, "qindex");
    return QIndexRecord{j.at("graph6").get<std::string>(), j.at("q").get<double>(),
                        j.at("residual").get<double>(), j.at("iterations").get<std::size_t>(),
                        j.at("method").get<std::string>()};
  }
  if (kind == "construction") {
    expect_fields(j, {"kind", "family", "params", "graph6"}, "construction");
    return ConstructionRecord{j.at("family").get<std::string>(),
                              j.at("params").get<std::map<std::string, std::int64_t>>(),
                              j.at("graph6").get<std::string>()};
  }
  throw ReportError("outcome: unknown kind '" + kind + "'");
}

}  // namespace detail

inline nlohmann::json to_json(const RunReport& r) {
  nlohmann::json outcomes = nlohmann::json::array();
  for (const auto& o : r.outcomes) outcomes.push_back(detail::outcome_to_json(o));
  return {{"command", r.command},
          {"parameters", r.parameters},
          {"outcomes", outcomes},
          {"artifact_version", r.artifact_version},
          {"elapsed", r.elapsed}};
}

inline RunReport report_from_json(const nlohmann::json& j) {
  detail::expect_fields(j, {"command", "parameters", "outcomes", "artifact_version", "elapsed"},
                        "report");
  RunReport r;
  try {
    r.command = j.at("command").get<std::string>();
    r.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
    for (const auto& o : j.at("outcomes")) r.outcomes.push_back(detail::outcome_from_json(o));
    r.artifact_version = j.at("artifact_version").get<std::string>();
    r.elapsed = j.at("elapsed").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ReportError(std::string("report: ") + e.what());
  }
  return r;
}

inline std::string serialize_report(const RunReport& r) { return to_json(r).dump(2) + "\n"; }

inline RunReport parse_report(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ReportError(std::string("report: ") + e.what());
  }
  return report_from_json(j);
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string num(double x) { return nlohmann::json(x).dump(); }

}  // namespace detail

/// Columns: kind,subject,status,value,reference,note
inline void write_csv(std::ostream& out, const RunReport& r) {
  using detail::csv_field;
  using detail::num;
  out << "kind,subject,status,value,reference,note\n";
  auto row = [&](const std::string& kind, const std::string& subject, const std::string& status,
                 const std::string& value, const std::string& ref, const std::string& note) {
    out << kind << ',' << csv_field(subject) << ',' << status << ',' << value << ',' << ref << ','
        << csv_field(note) << '\n';
  };
  for (const auto& o : r.outcomes) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, CheckOutcome>) {
            row("check", std::string(to_string(x.statement)), std::string(to_string(x.status)),
                num(x.lhs), num(x.rhs), x.note);
          } else if constexpr (std::is_same_v<T, SearchRecord>) {
            row("search", x.best_graph6, x.feasible ? "feasible" : "infeasible", num(x.q),
                num(x.q_high), x.matched_family.value_or(""));
          } else if constexpr (std::is_same_v<T, BoundRecord>) {
            row("bound", x.graph6, x.bound.name, num(x.bound.value), "",
                std::string(to_string(x.bound.relation)));
          } else if constexpr (std::is_same_v<T, QIndexRecord>) {
            row("qindex", x.graph6, x.method, num(x.q), num(x.residual), "");
          } else if constexpr (std::is_same_v<T, ConstructionRecord>) {
            row("construction", x.family, "", "", "", x.graph6);
          } else {
            for (const auto& [name, c] : x.per_statement)
              row("suite", name, c.violated ? "violated" : c.indeterminate ? "indeterminate" : "holds",
                  std::to_string(c.instances), std::to_string(c.violated),
                  "holds=" + std::to_string(c.holds) + " equality=" + std::to_string(c.equality_case) +
                      " unmet=" + std::to_string(c.precondition_unmet) +
                      " indeterminate=" + std::to_string(c.indeterminate));
          }
        },
        o);
  }
}

}  // namespace qext
