#include "qext/report.hpp"

#include <sstream>

#include <gtest/gtest.h>

#include "qext/bounds.hpp"
#include "qext/constructions.hpp"

namespace qext {
namespace {

RunReport sample_report() {
  RunReport r;
  r.command = "mixed";
  r.parameters = {{"n", "10"}, {"k", "2"}};
  r.elapsed = 0.125;

  CheckParams p;
  p.k = 1;
  p.part_a = VertexSet({0, 1});
  r.outcomes.push_back(check_statement(Statement::ni, complete_graph(3), p));
  r.outcomes.push_back(check_statement(Statement::ore, complete_graph(5), {}));
  p.k = 2;
  r.outcomes.push_back(check_statement(Statement::lemma1, disjoint_union({cycle_graph(4), complete_graph(3)}), p));

  auto q = q_index(s_nk(10, 2), 1e-12);
  r.outcomes.push_back(QIndexRecord{write_graph6(s_nk(10, 2)), q.q, q.residual, q.iterations, "power"});
  r.outcomes.push_back(BoundRecord{"Bw", das_bound(complete_graph(3))});
  r.outcomes.push_back(ConstructionRecord{"s_nk", {{"n", 10}, {"k", 2}}, write_graph6(s_nk(10, 2))});

  SearchOptions opt;
  opt.n = 6;
  opt.forbidden = {4};
  opt.restarts = 2;
  r.outcomes.push_back(make_search_record(opt, maximize_q_forbidden_cycles(opt)));

  SuiteOptions so;
  so.statements = {Statement::egc};
  so.n_max = 5;
  so.k_values = {2};
  r.outcomes.push_back(run_suite(so));
  return r;
}

TEST(Report, RoundTripIsByteIdentical) {
  RunReport r = sample_report();
  const std::string text = serialize_report(r);
  RunReport back = parse_report(text);
  EXPECT_EQ(back, r);
  EXPECT_EQ(serialize_report(back), text);
}

TEST(Report, RejectsUnknownAndMissingFields) {
  auto j = to_json(sample_report());
  auto extra = j;
  extra["surprise"] = 1;
  EXPECT_THROW(report_from_json(extra), ReportError);

  auto nested = j;
  nested["outcomes"][0]["extra"] = true;
  EXPECT_THROW(report_from_json(nested), ReportError);

  auto missing = j;
  missing.erase("elapsed");
  EXPECT_THROW(report_from_json(missing), ReportError);

  auto kind = j;
  kind["outcomes"][0]["kind"] = "mystery";
  EXPECT_THROW(report_from_json(kind), ReportError);

  EXPECT_THROW(parse_report("{not json"), ReportError);
}

TEST(Report, ExitCodes) {
  RunReport r;
  EXPECT_EQ(exit_code_for(r), 0);
  CheckOutcome c;
  c.status = CheckStatus::holds;
  r.outcomes.push_back(c);
  EXPECT_EQ(exit_code_for(r), 0);
  c.status = CheckStatus::precondition_unmet;
  r.outcomes.push_back(c);
  EXPECT_EQ(exit_code_for(r), 0);
  c.status = CheckStatus::indeterminate;
  r.outcomes.push_back(c);
  EXPECT_EQ(exit_code_for(r), 2);
  c.status = CheckStatus::violated;
  r.outcomes.push_back(c);
  EXPECT_EQ(exit_code_for(r), 1);

  RunReport s;
  SuiteReport suite;
  suite.totals.indeterminate = 1;
  s.outcomes.push_back(suite);
  EXPECT_EQ(exit_code_for(s), 2);
  suite.totals.violated = 1;
  s.outcomes.push_back(suite);
  EXPECT_EQ(exit_code_for(s), 1);
}

TEST(Report, CsvHasOneRowPerOutcome) {
  RunReport r = sample_report();
  std::ostringstream out;
  write_csv(out, r);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "kind,subject,status,value,reference,note");
  std::size_t rows = 0;
  std::size_t quoted_open = 0;
  while (std::getline(in, line)) {
    // notes never contain newlines, so one physical line per row
    quoted_open += static_cast<std::size_t>(std::count(line.begin(), line.end(), '"') % 2);
    ++rows;
  }
  EXPECT_EQ(quoted_open, 0u);
  EXPECT_EQ(rows, r.outcomes.size());
  EXPECT_NE(out.str().find("check,ni,holds,4.0,3.0"), std::string::npos);
}

}  // namespace
}  // namespace qext
