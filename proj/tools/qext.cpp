// qext command-line driver.
//
// Exit codes: 0 all checks hold, 1 some violation, 2 indeterminate without
// violations, 3 usage or runtime error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qext/qext.hpp"

namespace {

using namespace qext;

constexpr int kUsageError = 3;

struct Inputs {
  std::vector<std::string> graph6;
  std::string file;
};

std::vector<std::pair<std::string, Graph>> load_graphs(const Inputs& in) {
  std::vector<std::pair<std::string, Graph>> out;
  for (const auto& s : in.graph6) out.emplace_back(s, parse_graph6(s));
  auto add_stream = [&](std::istream& is) {
    for (auto& g : read_graph6_stream(is)) out.emplace_back(write_graph6(g), std::move(g));
  };
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw std::runtime_error("cannot open " + in.file);
    add_stream(f);
  }
  if (in.graph6.empty() && in.file.empty()) add_stream(std::cin);
  if (out.empty()) throw std::runtime_error("no input graphs");
  return out;
}

std::size_t default_jobs() {
  if (const char* env = std::getenv("QEXT_JOBS")) {
    try {
      auto v = std::stoul(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  return 1;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string fmt(double x, int precision = 12) {
  std::ostringstream os;
  os << std::setprecision(precision) << x;
  return os.str();
}

void print_check(const CheckOutcome& c) {
  std::cout << to_string(c.statement) << ": " << to_string(c.status) << "  lhs=" << fmt(c.lhs)
            << " rhs=" << fmt(c.rhs);
  if (!c.note.empty()) std::cout << "  (" << c.note << ")";
  std::cout << "\n";
}

void print_counts(const std::string& label, const StatusCounts& c) {
  std::cout << std::left << std::setw(20) << label << " instances=" << c.instances
            << " holds=" << c.holds << " equality=" << c.equality_case
            << " violated=" << c.violated << " unmet=" << c.precondition_unmet
            << " indeterminate=" << c.indeterminate << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Q-index extremal graph workbench"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kArtifactVersion));

  std::string out_path, csv_path;
  std::size_t jobs = default_jobs();
  std::uint64_t seed = 0;
  app.add_option("--out", out_path, "Write the JSON report here");
  app.add_option("--csv", csv_path, "Write a flat CSV table here");
  app.add_option("--jobs", jobs, "Worker threads for suite and search (default $QEXT_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "RNG seed (default 0)");

  Inputs inputs;
  double tol = 1e-10;
  auto* qindex = app.add_subcommand("qindex", "Compute q(G) for graph6 input");
  qindex->add_option("--graph6", inputs.graph6, "graph6 string (repeatable)");
  qindex->add_option("--file", inputs.file, "File with one graph6 string per line");
  qindex->add_option("--tol", tol, "Residual tolerance")->check(CLI::PositiveNumber);

  auto* bounds = app.add_subcommand("bounds", "Evaluate merris/das/edge-degree bounds and q(G)");
  bounds->add_option("--graph6", inputs.graph6, "graph6 string (repeatable)");
  bounds->add_option("--file", inputs.file, "File with one graph6 string per line");

  std::string family;
  std::int64_t n = 0, k = 0, c = -1, p = -1, copies = -1;
  auto* construct = app.add_subcommand("construct", "Emit a named family as graph6");
  construct->add_option("--family", family, "Family name")->required();
  auto* opt_n = construct->add_option("--n", n, "Order");
  auto* opt_k = construct->add_option("--k", k, "k");
  auto* opt_c = construct->add_option("--c", c, "Windmill copies");
  auto* opt_p = construct->add_option("--p", p, "Block count");
  auto* opt_copies = construct->add_option("--copies", copies, "Copies of K_2k");

  auto* prop1 = app.add_subcommand("prop1", "Check the S_{n,k} sandwich");
  prop1->add_option("--n", n)->required();
  prop1->add_option("--k", k)->required();

  auto* theorem1 = app.add_subcommand("theorem1", "Probe the constructions against n+2k-2");
  theorem1->add_option("--n", n)->required();
  theorem1->add_option("--k", k)->required();

  std::string statements, k_list = "1,2,3", corpus;
  std::size_t nmax = 6, nmin = 1;
  auto* suite = app.add_subcommand("suite", "Run statements over all small graphs");
  suite->add_option("--statements", statements, "Comma-separated statement tags")->required();
  suite->add_option("--nmax", nmax, "Largest order enumerated");
  suite->add_option("--nmin", nmin, "Smallest order enumerated");
  suite->add_option("--k", k_list, "Comma-separated k values");
  suite->add_option("--corpus", corpus, "graph6 corpus file instead of enumeration");

  std::string forbid, seed_construction;
  std::size_t budget = 10000, restarts = 8;
  std::size_t search_n = 0;
  auto* search = app.add_subcommand("search", "Hill-climb q(G) avoiding cycle lengths");
  search->add_option("--n", search_n)->required();
  search->add_option("--forbid", forbid, "Comma-separated cycle lengths")->required();
  search->add_option("--budget", budget, "Move evaluations per restart")->check(CLI::PositiveNumber);
  search->add_option("--restarts", restarts)->check(CLI::PositiveNumber);
  search->add_option("--seed-construction", seed_construction, "s_nk:k or s_nk_plus:k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsageError;
  }

  RunReport report;
  report.command = app.get_subcommands().front()->get_name();
  auto& params = report.parameters;
  params["seed"] = std::to_string(seed);
  const auto start = std::chrono::steady_clock::now();

  try {
    if (qindex->parsed()) {
      params["tol"] = fmt(tol);
      for (const auto& [g6, g] : load_graphs(inputs)) {
        if (g.order() == 0) throw std::runtime_error("q-index of the empty graph");
        auto r = q_index(g, tol);
        std::cout << g6 << "  q = " << fmt(r.q) << "  residual = " << fmt(r.residual, 3) << "\n";
        report.outcomes.push_back(QIndexRecord{g6, r.q, r.residual, r.iterations,
                                               std::string(to_string(r.method))});
      }
    } else if (bounds->parsed()) {
      for (const auto& [g6, g] : load_graphs(inputs)) {
        if (g.order() == 0) throw std::runtime_error("q-index of the empty graph");
        auto r = q_index(g, 1e-12);
        report.outcomes.push_back(QIndexRecord{g6, r.q, r.residual, r.iterations,
                                               std::string(to_string(r.method))});
        std::cout << g6 << "  q = " << fmt(r.q);
        std::vector<BoundValue> values;
        if (g.size() > 0) values.push_back(merris_bound(g));
        if (g.order() >= 2) values.push_back(das_bound(g));
        if (g.size() > 0) values.push_back(edge_degree_bound(g));
        for (const auto& b : values) {
          std::cout << "  " << b.name << " = " << fmt(b.value);
          report.outcomes.push_back(BoundRecord{g6, b});
        }
        std::cout << "\n";
      }
    } else if (construct->parsed()) {
      auto fam = parse_family(family);
      if (!fam) throw std::invalid_argument("unknown family '" + family + "'");
      ConstructionSpec spec{*fam, {}};
      if (*opt_n) spec.params["n"] = n;
      if (*opt_k) spec.params["k"] = k;
      if (*opt_c) spec.params["c"] = c;
      if (*opt_p) spec.params["p"] = p;
      if (*opt_copies) spec.params["copies"] = copies;
      params["family"] = family;
      for (const auto& [key, v] : spec.params) params[key] = std::to_string(v);
      Graph g = build_construction(spec);
      auto g6 = write_graph6(g);
      std::cout << g6 << "\n";
      report.outcomes.push_back(
          ConstructionRecord{family, {spec.params.begin(), spec.params.end()}, g6});
    } else if (prop1->parsed()) {
      params["n"] = std::to_string(n);
      params["k"] = std::to_string(k);
      Prop1Values v;
      auto outcome = check_prop1(n, k, &v);
      if (outcome.status != CheckStatus::precondition_unmet)
        std::cout << fmt(v.lower) << " < q(S) = " << fmt(v.q_snk) << " < q(S+) = "
                  << fmt(v.q_snk_plus) << " < " << fmt(v.upper) << "\n";
      print_check(outcome);
      report.outcomes.push_back(outcome);
    } else if (theorem1->parsed()) {
      params["n"] = std::to_string(n);
      params["k"] = std::to_string(k);
      auto outcome = theorem1_construction_probe(n, k);
      print_check(outcome);
      report.outcomes.push_back(outcome);
    } else if (suite->parsed()) {
      SuiteOptions opt;
      for (const auto& s : split(statements, ',')) {
        auto st = parse_statement(s);
        if (!st) throw std::invalid_argument("unknown statement '" + s + "'");
        opt.statements.push_back(*st);
      }
      opt.k_values.clear();
      for (const auto& s : split(k_list, ',')) opt.k_values.push_back(std::stoll(s));
      opt.n_min = nmin;
      opt.n_max = nmax;
      opt.seed = seed;
      opt.jobs = jobs;
      if (!corpus.empty()) {
        std::ifstream f(corpus);
        if (!f) throw std::runtime_error("cannot open " + corpus);
        opt.corpus = read_graph6_stream(f);
        params["corpus"] = corpus;
      } else {
        params["nmin"] = std::to_string(nmin);
        params["nmax"] = std::to_string(nmax);
      }
      params["statements"] = statements;
      params["k"] = k_list;
      auto rep = run_suite(opt);
      for (const auto& [name, counts] : rep.per_statement) print_counts(name, counts);
      print_counts("total", rep.totals);
      for (const auto& v : rep.violations)
        std::cout << "violation " << to_string(v.statement) << " " << v.graph6 << " " << v.params
                  << " lhs=" << fmt(v.outcome.lhs) << " rhs=" << fmt(v.outcome.rhs) << "  "
                  << v.outcome.note << "\n";
      report.outcomes.push_back(std::move(rep));
    } else if (search->parsed()) {
      SearchOptions opt;
      opt.n = search_n;
      for (const auto& s : split(forbid, ',')) opt.forbidden.push_back(std::stoul(s));
      opt.budget = budget;
      opt.restarts = restarts;
      opt.seed = seed;
      opt.jobs = jobs;
      if (!seed_construction.empty()) {
        auto parts = split(seed_construction, ':');
        if (parts.size() != 2) throw std::invalid_argument("--seed-construction expects family:k");
        auto fam = parse_family(parts[0]);
        if (!fam || (*fam != Family::s_nk && *fam != Family::s_nk_plus))
          throw std::invalid_argument("seed construction must be s_nk or s_nk_plus");
        opt.seed_graph = build_construction(
            {*fam, {{"n", static_cast<std::int64_t>(search_n)}, {"k", std::stoll(parts[1])}}});
        params["seed_construction"] = seed_construction;
      }
      params["n"] = std::to_string(search_n);
      params["forbid"] = forbid;
      params["budget"] = std::to_string(budget);
      params["restarts"] = std::to_string(restarts);
      auto r = maximize_q_forbidden_cycles(opt);
      auto rec = make_search_record(opt, r);
      std::cout << rec.best_graph6 << "\n";
      std::cout << "q = " << fmt(r.q) << "  interval [" << fmt(rec.q_low) << ", " << fmt(rec.q_high)
                << "]  feasible = " << (r.feasible ? "yes" : "no")
                << "  accepted_moves = " << r.accepted_moves;
      if (r.matched_family) std::cout << "  family = " << *r.matched_family;
      std::cout << "\n";
      for (const auto& t : r.ties) std::cout << "tie " << t.graph6 << " q = " << fmt(t.q) << "\n";
      report.outcomes.push_back(std::move(rec));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }

  report.elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  try {
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) throw std::runtime_error("cannot write " + out_path);
      f << serialize_report(report);
    }
    if (!csv_path.empty()) {
      std::ofstream f(csv_path);
      if (!f) throw std::runtime_error("cannot write " + csv_path);
      write_csv(f, report);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return exit_code_for(report);
}
