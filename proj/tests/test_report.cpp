#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "prolab/report.hpp"
#include "prolab/variety_zoo.hpp"

using namespace prolab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args, const std::string& out_path) {
  const std::string cmd = std::string(PROLAB_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("battery selections") {
  const BatteryReport r = run_battery({"z-family"}, Field::exact, 0);
  CHECK(r.cases.size() == 6);
  CHECK(r.failed == 0);
  for (size_t i = 1; i < r.cases.size(); ++i) CHECK(r.cases[i - 1].id < r.cases[i].id);
  for (const auto& c : r.cases) CHECK(!c.citation.empty());
  CHECK_THROWS(run_battery({"no-such-group"}, Field::exact, 0));

  // A single case id is addressable.
  const BatteryReport one = run_battery({"ihss-prolong/quadric(3)"}, Field::exact, 0);
  CHECK(one.cases.size() == 1);
  CHECK(one.cases[0].computed == 3);
  CHECK(one.all_pass());
}

TEST_CASE("the reserved empty selection yields an empty passing report") {
  const BatteryReport r = run_battery({"empty"}, Field::exact, 0);
  CHECK(r.cases.empty());
  CHECK(r.all_pass());
}

TEST_CASE("every registered case has a unique id and a citation") {
  const auto ids = battery_case_ids();
  std::set<std::string> unique(ids.begin(), ids.end());
  CHECK(unique.size() == ids.size());
  const auto groups = battery_groups();
  CHECK(std::find(groups.begin(), groups.end(), "stretch-op2") != groups.end());
}

TEST_CASE("reports are bit-identical for identical inputs") {
  const BatteryReport a = run_battery({"z-family"}, Field::exact, 1);
  const BatteryReport b = run_battery({"z-family"}, Field::exact, 1);
  CHECK(emit_report_json(a, /*include_timings=*/false) ==
        emit_report_json(b, /*include_timings=*/false));
  CHECK(emit_report_csv(a, false) == emit_report_csv(b, false));
}

TEST_CASE("report json round trip") {
  const BatteryReport r = run_battery({"z-family"}, Field::exact, 2);
  const std::string bytes = emit_report_json(r, false);
  const BatteryReport back = parse_report_json(bytes);
  CHECK(emit_report_json(back, false) == bytes);
  CHECK(back.passed == r.passed);
  CHECK(back.failed == r.failed);
  CHECK(back.field == r.field);
  CHECK_THROWS(parse_report_json("{\"schema\": \"other/9\", \"cases\": []}"));
}

TEST_CASE("csv header is fixed") {
  const BatteryReport r = run_battery({"ihss-prolong/quadric(3)"}, Field::exact, 0);
  const std::string csv = emit_report_csv(r, false);
  CHECK(csv.rfind("id,citation,computed,expected,pass,constraint_rows,constraint_cols\n",
                  0) == 0);
}

TEST_CASE("variety json round trip") {
  const VarietyPresentation q3 = quadric(3);
  const std::string bytes = emit_variety_json(q3, /*sample_count=*/12, /*seed=*/3);
  const VarietyPresentation back = parse_variety_file(bytes);
  CHECK(back.ambient == 3);
  CHECK(back.quadrics == q3.quadrics);
  REQUIRE(back.sampler);
  // The embedded samples satisfy the quadrics (validated on parse) and the
  // presentation passes the cone probes.
  const MatQ pts = sample_points(back, 8, 0, /*check_spanning=*/false);
  CHECK(pts.rows() == 8);
  for (Index i = 0; i < 3; ++i) CHECK(back.base_point(i) == q3.base_point(i));
}

TEST_CASE("variety json rejects malformed input with a field path") {
  const std::string base = R"({"schema": "prolab-variety/1", "ambient_dim": 2,
    "quadrics": [[[0, 1, 1]]], "base_point": [0, 1]})";
  CHECK_NOTHROW(parse_variety_file(base));

  try {
    parse_variety_file(R"({"schema": "prolab-variety/1", "ambient_dim": 2,
      "quadrics": [[[0, 1, 1]]], "base_point": [0, "1/0"]})");
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("base_point[1]") != std::string::npos);
  }

  // Off-cone base point.
  CHECK_THROWS(parse_variety_file(R"({"schema": "prolab-variety/1", "ambient_dim": 2,
    "quadrics": [[[0, 1, 1]]], "base_point": [1, 1]})"));
  // Wrong schema.
  CHECK_THROWS(parse_variety_file(R"({"schema": "prolab-variety/2", "ambient_dim": 2,
    "quadrics": [], "base_point": [0, 1]})"));
  // Index out of range.
  try {
    parse_variety_file(R"({"schema": "prolab-variety/1", "ambient_dim": 2,
      "quadrics": [[[0, 5, 1]]], "base_point": [0, 1]})");
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("quadrics[0][0]") != std::string::npos);
  }
}

TEST_CASE("cli: variety subcommands") {
  CHECK(run_cli("variety list", "/tmp/prolab_t1.txt") == 0);
  const std::string listing = slurp("/tmp/prolab_t1.txt");
  CHECK(listing.find("veronese(2)") != std::string::npos);
  CHECK(listing.find("cayley_op2") != std::string::npos);

  CHECK(run_cli("variety check 'quadric(4)'", "/tmp/prolab_t2.txt") == 0);
  CHECK(slurp("/tmp/prolab_t2.txt").find("[FAIL]") == std::string::npos);

  CHECK(run_cli("variety show 'quadric(3)' --json --samples 6 > /tmp/prolab_q3.json; "
                "true",
                "/tmp/prolab_t3.txt") == 0);
  const VarietyPresentation q3 = parse_variety_file(slurp("/tmp/prolab_q3.json"));
  CHECK(q3.ambient == 3);
}

TEST_CASE("cli: prolong and exit codes") {
  CHECK(run_cli("prolong --variety 'quadric(3)' --k 1", "/tmp/prolab_t4.txt") == 0);
  CHECK(slurp("/tmp/prolab_t4.txt").find("dim g^(1) = 3") != std::string::npos);

  CHECK(run_cli("prolong --algebra 'co(4)' --k 2", "/tmp/prolab_t5.txt") == 0);
  CHECK(slurp("/tmp/prolab_t5.txt").find("dim g^(2) = 0") != std::string::npos);

  // Usage errors exit with 2.
  CHECK(run_cli("prolong --k 1", "/tmp/prolab_t6.txt") == 2);
  CHECK(run_cli("nonsense", "/tmp/prolab_t7.txt") == 2);
  CHECK(run_cli("prolong --variety 'quadric(3)' --k 1 --field nope",
                "/tmp/prolab_t8.txt") == 2);
  CHECK(run_cli("battery --select no-such-case", "/tmp/prolab_t9.txt") == 2);
}

TEST_CASE("cli: battery output and determinism") {
  CHECK(run_cli("battery --select z-family --format json --no-timings --out "
                "/tmp/prolab_b1.json",
                "/tmp/prolab_t10.txt") == 0);
  CHECK(run_cli("battery --select z-family --format json --no-timings --out "
                "/tmp/prolab_b2.json",
                "/tmp/prolab_t11.txt") == 0);
  CHECK(slurp("/tmp/prolab_b1.json") == slurp("/tmp/prolab_b2.json"));
  const BatteryReport r = parse_report_json(slurp("/tmp/prolab_b1.json"));
  CHECK(r.all_pass());
  CHECK(r.schema == kReportSchema);

  CHECK(run_cli("battery --select z-family --format csv --no-timings",
                "/tmp/prolab_t12.txt") == 0);
  CHECK(slurp("/tmp/prolab_t12.txt").rfind("id,citation,", 0) == 0);

  // The reserved empty selection: zero cases, exit 0.
  CHECK(run_cli("battery --select empty --format json --no-timings",
                "/tmp/prolab_t17.txt") == 0);
  CHECK(parse_report_json(slurp("/tmp/prolab_t17.txt")).cases.empty());
}

TEST_CASE("cli: project subcommand") {
  CHECK(run_cli("project --variety 'veronese(2)' --l-random 1 --seed 4",
                "/tmp/prolab_t13.txt") == 0);
  const std::string out = slurp("/tmp/prolab_t13.txt");
  CHECK(out.find("dim g^(1) = 6") != std::string::npos);
  // A general 1-dimensional center kills everything for the Veronese.
  CHECK(out.find("A(L, .) = 0} = 0") != std::string::npos);
}

TEST_CASE("cli: secant and vmrt") {
  CHECK(run_cli("secant --variety 'segre(3,3)' --trials 2", "/tmp/prolab_t14.txt") == 0);
  CHECK(slurp("/tmp/prolab_t14.txt").find("= 7") != std::string::npos);
  CHECK(run_cli("vmrt --variety 'quadric(6)'", "/tmp/prolab_t15.txt") == 0);
  CHECK(slurp("/tmp/prolab_t15.txt").find("= 2") != std::string::npos);
  CHECK(run_cli("vmrt --variety 'veronese(2)'", "/tmp/prolab_t16.txt") == 0);
  CHECK(slurp("/tmp/prolab_t16.txt").find("no lines") != std::string::npos);
}
