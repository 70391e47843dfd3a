#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "idens/commands.hpp"
#include "idens/parser.hpp"
#include "idens/report.hpp"
#include "idens/suites.hpp"

using idens::Bounds;
using idens::Rational;
using idens::Report;

TEST_CASE("machine rendering round-trips") {
  Report report;
  report.command = "measure";
  report.add("input", "[0,1] u [2,3]");
  report.add("measure", "2/1");
  report.add("status", "ok");

  std::string text = render_machine(report);
  idens::ParsedReport back = idens::parse_machine_report(text);
  CHECK(back.command == "measure");
  REQUIRE(back.find("measure"));
  CHECK(Rational::from_string(*back.find("measure")) == Rational(2));

  Bounds b(Rational(1, 2), Rational(1025, 2048));
  std::string rendered = idens::render_bounds(b, "two-sided");
  CHECK(idens::parse_bounds_value(rendered) == b);

  CHECK_THROWS_AS(idens::parse_machine_report("bogus"), idens::parse_error);
}

TEST_CASE("command examples and exit codes") {
  Report r = idens::cmd_measure("[0,1] u [2,3]");
  CHECK(r.exit_code == 0);
  CHECK(*idens::parse_machine_report(render_machine(r)).find("measure") == "2/1");

  r = idens::cmd_ilimsup("steps(mod=1; 0:0; on squares -> 1)", "d0");
  CHECK(*idens::parse_machine_report(render_machine(r)).find("ilimsup") == "0/1");
  r = idens::cmd_ilimsup("steps(mod=1; 0:0; on squares -> 1)", "fin");
  CHECK(*idens::parse_machine_report(render_machine(r)).find("ilimsup") == "1/1");

  r = idens::cmd_adens("ap(1,2) | ap(2,4)");
  CHECK(*idens::parse_machine_report(render_machine(r)).find("density") == "3/4");

  r = idens::cmd_phi("[0,1] u [1,2]");
  CHECK(*idens::parse_machine_report(render_machine(r)).find("symdiff-measure") == "0/1");
  // Set values in reports parse back to equal values.
  const std::string& phi_text = *idens::parse_machine_report(render_machine(r)).find("phi");
  CHECK(std::get<idens::IntervalSet>(idens::parse_set(phi_text)) ==
        idens::IntervalSet::normalize({{Rational(0), Rational(2)}}));

  r = idens::cmd_iconv("steps(mod=1; 0:0; except 1 -> 1; except 2 -> 1)", "fin",
                       "0", "1/2");
  CHECK(*idens::parse_machine_report(render_machine(r)).find("converges") == "true");

  CHECK_THROWS_AS(idens::cmd_measure("gapset(c=2)"), idens::input_error);
  CHECK_THROWS_AS(idens::cmd_measure("[oops"), idens::parse_error);

  // Falsifier: non-sparse instance exits 1 with a witness, sparse-at-0
  // instance exits 0.
  r = idens::cmd_falsify("[0,1]", "0", "d0", 20, 7);
  CHECK(r.exit_code == 1);
  r = idens::cmd_falsify("[2,3]", "0", "d0", 20, 7);
  CHECK(r.exit_code == 0);
}

TEST_CASE("density command on both source kinds") {
  Report r = idens::cmd_density("gapset(c=2)", "0", 6);
  auto parsed = idens::parse_machine_report(render_machine(r));
  Bounds upper = idens::parse_bounds_value(*parsed.find("upper-density"));
  CHECK(upper.lo == Rational(1, 2));
  CHECK(upper.width() <= idens::pow(Rational(2), -8));

  r = idens::cmd_density("[0,1]", "0", 6);
  parsed = idens::parse_machine_report(render_machine(r));
  CHECK(*parsed.find("right-upper") == "1/1");
  CHECK(*parsed.find("left-upper") == "0/1");

  CHECK_THROWS_AS(idens::cmd_density("gapset(c=2)", "1/2", 6), idens::input_error);
}

TEST_CASE("idensity command certifies the positive gap-set constant") {
  Report r = idens::cmd_idensity("gapset(c=2)", "0", "d0", {"rgeom(p=0, c=2)"}, 6);
  auto parsed = idens::parse_machine_report(render_machine(r));
  const std::string* upper = parsed.find("upper-i-density");
  REQUIRE(upper);
  CHECK(idens::parse_bounds_value(*upper).lo >= Rational(1, 2));
  CHECK(upper->find(">=-certified") != std::string::npos);
}

TEST_CASE("reproduce targets") {
  Report r = idens::cmd_reproduce("example-1.7", "2", 6, 1, 50);
  CHECK(r.exit_code == 0);
  auto parsed = idens::parse_machine_report(render_machine(r));
  CHECK(idens::parse_bounds_value(*parsed.find("upper-density")).lo == Rational(1, 2));
  CHECK(*parsed.find("certificate-accepted") == "true");

  r = idens::cmd_reproduce("section-3-example", "2", 6, 1, 50);
  CHECK(r.exit_code == 0);
  parsed = idens::parse_machine_report(render_machine(r));
  CHECK(Rational::from_string(*parsed.find("positive-constant")) >= Rational(1, 2));

  CHECK_THROWS_AS(idens::cmd_reproduce("example-9.9", "2", 6, 1, 50), idens::input_error);
}

TEST_CASE("suites are deterministic and worker-count invariant") {
  Report a = idens::cmd_suite("phi-null-difference", 42, 60, 1);
  Report b = idens::cmd_suite("phi-null-difference", 42, 60, 1);
  CHECK(render_machine(a) == render_machine(b));
  CHECK(a.exit_code == 0);

  Report c = idens::cmd_suite("phi-null-difference", 42, 60, 4);
  // Tallies derive per-trial randomness from (seed, trial), so even the
  // worker count cannot change the report body except the workers field.
  auto strip_workers = [](const Report& r) {
    Report copy = r;
    for (auto& [k, v] : copy.fields)
      if (k == "workers") v = "-";
    return render_machine(copy);
  };
  CHECK(strip_workers(a) == strip_workers(c));

  CHECK_THROWS_AS(idens::cmd_suite("no-such-suite", 1, 10, 1), idens::input_error);
}

TEST_CASE("quick pass over every suite") {
  for (const auto& name : idens::suite_names()) {
    Report r = idens::cmd_suite(name, 7, 40, 2);
    INFO(render_machine(r));
    CHECK(r.exit_code == 0);
  }
}

#ifdef IDENS_CLI_PATH
TEST_CASE("binary smoke test: exit codes and byte-identical reruns") {
  auto run = [](const std::string& args, const std::string& out_file) {
    std::string cmd = std::string(IDENS_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::remove(out_file.c_str());
    return std::make_pair(rc == -1 ? -1 : WEXITSTATUS(rc), buffer.str());
  };

  auto [rc0, out0] = run("measure \"[0,1] u [2,3]\" --format machine", "/tmp/idens_t0.txt");
  CHECK(rc0 == 0);
  CHECK(out0.find("measure = 2/1") != std::string::npos);

  auto [rc1, out1] = run("suite density-axioms --trials 25 --seed 9 --format machine",
                         "/tmp/idens_t1.txt");
  auto [rc2, out2] = run("suite density-axioms --trials 25 --seed 9 --format machine",
                         "/tmp/idens_t2.txt");
  CHECK(rc1 == 0);
  CHECK(out1 == out2);

  auto [rc3, out3] = run("measure \"[3,1]\"", "/tmp/idens_t3.txt");
  CHECK(rc3 == 2);

  auto [rc4, out4] = run("falsify \"[0,1]\" 0 d0 --trials 10", "/tmp/idens_t4.txt");
  CHECK(rc4 == 1);
}
#endif
