#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "support.hpp"
#include "wordeq/errors.hpp"
#include "wordeq/guided.hpp"
#include "wordeq/generator.hpp"
#include "wordeq/metrics.hpp"
#include "wordeq/witness.hpp"

using namespace wordeq;
using testsupport::id;
using testsupport::word;

TEST_CASE("pair rule expands a popped letter") {
  auto eq = parse_equation("X=Y");
  auto& t = *eq.table();
  const auto a = t.intern('a');
  const auto b = t.intern('b');
  const auto c = t.fresh_letter(OriginKind::PairFresh, 1);
  DerivationLog log;
  log.append(PairRule{c, a, b, 1});
  log.append(PopRecord{id(eq, 'X'), End::Left, Word{c}, 1});
  const auto w = reconstruct_witness(log, eq, {{id(eq, 'X'), word(eq, "b")}});
  CHECK(w.at(id(eq, 'X')) == word(eq, "abb"));
  CHECK(w.at(id(eq, 'Y')).empty());
}

TEST_CASE("block rule expands to a run") {
  auto eq = parse_equation("X=Y");
  auto& t = *eq.table();
  const auto a = t.intern('a');
  const auto a3 = t.fresh_letter(OriginKind::BlockFresh, 1);
  DerivationLog log;
  log.append(BlockRule{a3, a, 3, 1});
  log.append(PopRecord{id(eq, 'X'), End::Left, Word{a3}, 1});
  log.append(RemovedRecord{id(eq, 'X'), 1});
  const auto w = reconstruct_witness(log, eq, {});
  CHECK(w.at(id(eq, 'X')) == word(eq, "aaa"));
}

TEST_CASE("nested rules and right pops nest inwards") {
  auto eq = parse_equation("X=Y");
  auto& t = *eq.table();
  const auto a = t.intern('a');
  const auto b = t.intern('b');
  const auto c = t.intern('c');
  const auto ab = t.fresh_letter(OriginKind::PairFresh, 1);
  const auto ab2 = t.fresh_letter(OriginKind::BlockFresh, 2);
  DerivationLog log;
  log.append(PopRecord{id(eq, 'X'), End::Right, Word{b}, 1});
  log.append(PairRule{ab, a, b, 1});
  log.append(BlockRule{ab2, ab, 2, 2});
  log.append(PopRecord{id(eq, 'X'), End::Right, Word{c}, 2});
  log.append(PopRecord{id(eq, 'X'), End::Left, Word{ab2}, 2});
  const auto w = reconstruct_witness(log, eq, {{id(eq, 'X'), Word{a}}});
  // left pops in order, final image, then right pops latest first
  CHECK(w.at(id(eq, 'X')) == word(eq, "ababacb"));
}

TEST_CASE("dangling rule") {
  auto eq = parse_equation("X=Y");
  auto& t = *eq.table();
  const auto lost = t.fresh_letter(OriginKind::PairFresh, 1);
  DerivationLog log;
  log.append(PopRecord{id(eq, 'X'), End::Left, Word{lost}, 1});
  CHECK_THROWS_AS(reconstruct_witness(log, eq, {}), DanglingRule);

  DerivationLog forward;
  const auto later = t.fresh_letter(OriginKind::PairFresh, 1);
  const auto earlier_ref = t.fresh_letter(OriginKind::PairFresh, 1);
  // A rule may only refer to older symbols.
  forward.append(PairRule{later, earlier_ref, t.intern('a'), 1});
  CHECK_THROWS_AS(reconstruct_witness(forward, eq, {}), DanglingRule);
}

TEST_CASE("h helper") {
  CHECK(h_of(3) == doctest::Approx(6.0));
  CHECK(h_of(0) == 0.0);
  CHECK(h_of(1) == doctest::Approx(1.0));
}

namespace {

RunMetrics sample_run() {
  const auto inst = generate_instance(7, 2, 3, 6, 5);
  SolverConfig cfg;
  return solve_guided(inst.eq, inst.solution, cfg).metrics;
}

}  // namespace

TEST_CASE("empty run exports a header-only CSV") {
  const auto csv = export_csv(RunMetrics{});
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
  CHECK(csv.rfind("# wordeq-metrics v1\n", 0) == 0);
  CHECK(parse_csv(csv).steps.empty());
}

TEST_CASE("CSV and JSON round trips are byte-identical") {
  const auto m = sample_run();
  REQUIRE(!m.steps.empty());
  const auto csv = export_csv(m);
  CHECK(export_csv(parse_csv(csv)) == csv);
  const auto json = export_json(m);
  CHECK(export_json(parse_json(json)) == json);
  CHECK(json.find("\"h_d\"") != std::string::npos);
  CHECK(parse_json(json).phases.size() == m.phases.size());
}

TEST_CASE("final step of a guided run has single-symbol sides") {
  const auto m = sample_run();
  REQUIRE(!m.steps.empty());
  CHECK(m.steps.back().lhs_len <= 1);
  CHECK(m.steps.back().rhs_len <= 1);
  for (std::size_t i = 0; i < m.steps.size(); ++i) CHECK(m.steps[i].step == i);
}

TEST_CASE("malformed metrics") {
  CHECK_THROWS_AS(parse_csv("phase,step\n"), ParseError);
  CHECK_THROWS_AS(parse_csv("# wordeq-metrics v1\nnot,the,header\n"), ParseError);
  auto csv = export_csv(sample_run());
  csv += "1,2,3\n";
  CHECK_THROWS_AS(parse_csv(csv), ParseError);
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  CHECK_THROWS_AS(parse_json("{\"schema_version\": 99}"), ParseError);
}

TEST_CASE("write_file reports unwritable paths") {
  CHECK_THROWS_AS(write_file("/nonexistent-dir/x/metrics.csv", "x"), IoError);
  const auto path = std::filesystem::temp_directory_path() / "wordeq_metrics_test.csv";
  write_file(path.string(), "abc");
  CHECK(std::filesystem::file_size(path) == 3);
  std::filesystem::remove(path);
}

TEST_CASE("space bound checks") {
  RunMetrics m;
  m.input_abs = 10;
  PhaseSummary p;
  p.phase = 1;
  p.h_d_start = 30;
  p.h_d_end = 20 + 410;  // exactly 2/3 * 30 + 41 * 10
  p.h_n_start = 60;
  p.h_n_end = 50 + 155400 + 1;  // one over 5/6 * 60 + 15540 * 10
  p.h_peak = 8 * 90 + 21040;
  p.sum_h_p = 1290;
  p.sum_h_e = 1290.5;
  m.phases.push_back(p);
  const auto checks = check_space_bounds(m);
  REQUIRE(checks.size() == 5);
  CHECK(checks[0].name == "h_d_recurrence");
  CHECK(checks[0].ok());
  CHECK_FALSE(checks[1].ok());
  CHECK(checks[2].ok());
  CHECK(checks[3].ok());
  CHECK_FALSE(checks[4].ok());
}

TEST_CASE("max ratio skips transient steps") {
  RunMetrics m;
  m.input_abs = 4;
  StepRecord s;
  s.kind = "block_pop";
  s.h_d = 400;
  m.steps.push_back(s);
  s.kind = "block_compress";
  s.h_d = 6;
  s.h_n = 2;
  m.steps.push_back(s);
  CHECK(m.max_ratio() == doctest::Approx(2.0));
}
