#include "idens/commands.hpp"

#include <fstream>
#include <sstream>

#include "idens/parser.hpp"
#include "idens/sparse.hpp"
#include "idens/suites.hpp"

namespace idens {

namespace {

IntervalSet expect_interval_set(const SetSource& src, const std::string& what) {
  if (const auto* ivs = std::get_if<IntervalSet>(&src)) return *ivs;
  throw input_error(what + " requires a finite interval union");
}

GapSet expect_gap_set(const SetSource& src, const std::string& what) {
  if (const auto* g = std::get_if<GapSet>(&src)) return *g;
  throw input_error(what + " requires a gapset(c=...) source");
}

void add_suite_fields(Report& report, const SuiteReport& suite) {
  report.add("suite", suite.name);
  report.add("seed", std::to_string(suite.seed));
  report.add("trials", std::to_string(suite.trials));
  report.add("workers", std::to_string(suite.workers));
  for (const auto& check : suite.checks) {
    std::string line = "pass " + std::to_string(check.pass) + " fail " +
                       std::to_string(check.fail);
    if (!check.first_failure.empty()) line += " first-failure: " + check.first_failure;
    report.add("check " + check.name, line);
  }
  report.add("status", suite.all_pass() ? "ok" : "failed");
  report.exit_code = suite.all_pass() ? 0 : 1;
}

}  // namespace

Report cmd_measure(const std::string& set_spec) {
  Report report;
  report.command = "measure";
  report.add("input", set_spec);
  IntervalSet e = expect_interval_set(parse_set(set_spec), "measure");
  report.add("measure", measure(e).str());
  report.add("status", "ok");
  return report;
}

Report cmd_phi(const std::string& set_spec) {
  Report report;
  report.command = "phi";
  report.add("input", set_spec);
  IntervalSet e = expect_interval_set(parse_set(set_spec), "phi");
  IntervalSet phi = density_point_set(e);
  report.add("phi", to_string(phi));
  report.add("symdiff-measure", measure(symmetric_difference(e, phi)).str());
  report.add("status", "ok");
  return report;
}

Report cmd_density(const std::string& set_spec, const std::string& point, long depth) {
  Report report;
  report.command = "density";
  report.add("input", set_spec);
  report.add("point", parse_rational(point).str());
  SetSource src = parse_set(set_spec);
  if (const auto* g = std::get_if<GapSet>(&src)) {
    if (!parse_rational(point).is_zero())
      throw input_error("gap-set densities are computed at 0 only");
    auto bounds = gap_density_bounds(*g, depth);
    report.add("depth", std::to_string(depth));
    report.add("upper-density", render_bounds(bounds.upper_density, "two-sided"));
    report.add("lower-density", render_bounds(bounds.lower_density, "two-sided"));
    report.add("floor", (Rational(1) - Rational(1) / g->ratio()).str());
  } else {
    auto d = one_sided_densities(std::get<IntervalSet>(src), parse_rational(point));
    report.add("right-upper", d.right_upper.str());
    report.add("right-lower", d.right_lower.str());
    report.add("left-upper", d.left_upper.str());
    report.add("left-lower", d.left_lower.str());
  }
  report.add("status", "ok");
  return report;
}

Report cmd_adens(const std::string& index_spec) {
  Report report;
  report.command = "adens";
  report.add("input", index_spec);
  report.add("density", parse_index_set(index_spec).density().str());
  report.add("status", "ok");
  return report;
}

Report cmd_ilimsup(const std::string& seq_spec, const std::string& ideal_spec) {
  Report report;
  report.command = "ilimsup";
  report.add("input", seq_spec);
  report.add("ideal", ideal_spec);
  StepSequence x = parse_steps(seq_spec);
  Ideal ideal = parse_ideal(ideal_spec);
  report.add("ilimsup", i_limsup(x, ideal).str());
  report.add("iliminf", i_liminf(x, ideal).str());
  report.add("status", "ok");
  return report;
}

Report cmd_iconv(const std::string& seq_spec, const std::string& ideal_spec,
                 const std::string& limit, const std::string& eps) {
  Report report;
  report.command = "iconv";
  report.add("input", seq_spec);
  report.add("ideal", ideal_spec);
  StepSequence x = parse_steps(seq_spec);
  Ideal ideal = parse_ideal(ideal_spec);
  Rational l = parse_rational(limit);
  Rational e = parse_rational(eps);
  report.add("limit", l.str());
  report.add("eps", e.str());
  report.add("converges", i_converges(x, ideal, l, e) ? "true" : "false");
  report.add("status", "ok");
  return report;
}

Report cmd_idensity(const std::string& set_spec, const std::string& point,
                    const std::string& ideal_spec,
                    const std::vector<std::string>& family_specs, long depth) {
  Report report;
  report.command = "idensity";
  report.add("input", set_spec);
  Rational p = parse_rational(point);
  report.add("point", p.str());
  report.add("ideal", ideal_spec);
  report.add("depth", std::to_string(depth));
  SetSource src = parse_set(set_spec);
  Ideal ideal = parse_ideal(ideal_spec);
  std::vector<WindowFamily> families;
  for (const auto& spec : family_specs) families.push_back(parse_family(spec));
  if (families.empty()) {
    // Default family set: symmetric windows, plus one-sided geometric ones.
    families.push_back(WindowFamily::symmetric_harmonic(p));
    if (const auto* g = std::get_if<GapSet>(&src))
      families.push_back(WindowFamily::right_geometric(p, g->ratio()));
  }
  auto enc = i_density_enclosure(src, p, ideal, families, depth);
  report.add("upper-i-density", render_bounds(enc.upper.bounds, to_string(enc.upper.side)));
  report.add("lower-i-density", render_bounds(enc.lower.bounds, to_string(enc.lower.side)));
  for (const auto& fe : enc.per_family) {
    report.add("family " + fe.family,
               "ilimsup " + fe.limsup.str() + " iliminf " + fe.liminf.str());
  }
  if (const auto* ivs = std::get_if<IntervalSet>(&src))
    report.add("classification", to_string(classify_point_i_density(*ivs, p, ideal)));
  report.add("status", "ok");
  return report;
}

Report cmd_sparse_check(const std::string& set_spec, const std::string& point,
                        const std::string& side) {
  Report report;
  report.command = "sparse-check";
  report.add("input", set_spec);
  Rational p = parse_rational(point);
  report.add("point", p.str());
  report.add("side", side);
  if (side != "left" && side != "right") throw input_error("side must be left or right");
  IntervalSet e = expect_interval_set(parse_set(set_spec), "sparse-check");
  bool sparse =
      sparse_check_interval_set(e, p, side == "left" ? Side::left : Side::right);
  report.add("sparse", sparse ? "true" : "false");
  report.add("status", "ok");
  return report;
}

Report cmd_sparse_certify(const std::string& set_spec, const std::string& eps,
                          long depth, const std::string& out_file) {
  Report report;
  report.command = "sparse-certify";
  report.add("input", set_spec);
  GapSet g = expect_gap_set(parse_set(set_spec), "sparse-certify");
  Rational e = parse_rational(eps);
  SparsenessCertificate cert = sparse_certify_right(g, e, depth);
  report.add("epsilon", e.str());
  report.add("depth", std::to_string(depth));
  report.add("pattern", cert.all_good ? "all-good" : "banded");
  report.add("h", cert.h.str());
  report.add("beta-star", cert.beta_star.str());
  report.add("self-check", verify_certificate(cert).accepted ? "accepted" : "rejected");
  if (!out_file.empty()) {
    std::ofstream out(out_file);
    if (!out) throw input_error("cannot write certificate file: " + out_file);
    out << serialize(cert);
    report.add("certificate-file", out_file);
  } else {
    report.add("certificate", "inline below");
    for (std::istringstream lines(serialize(cert)); ;) {
      std::string line;
      if (!std::getline(lines, line)) break;
      report.add("cert", line);
    }
  }
  report.add("status", "ok");
  return report;
}

Report cmd_sparse_verify(const std::string& cert_file) {
  Report report;
  report.command = "sparse-verify";
  report.add("certificate-file", cert_file);
  std::ifstream in(cert_file);
  if (!in) throw input_error("cannot read certificate file: " + cert_file);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  SparsenessCertificate cert = parse_certificate(buffer.str());
  VerifyResult result = verify_certificate(cert);
  if (result.accepted) {
    report.add("status", "accepted");
  } else {
    report.add("first-failing-inequality", result.first_failure);
    report.add("status", "rejected");
    report.exit_code = 1;
  }
  return report;
}

Report cmd_falsify(const std::string& set_spec, const std::string& point,
                   const std::string& ideal_spec, long trials, std::uint64_t seed) {
  Report report;
  report.command = "falsify";
  report.add("input", set_spec);
  Rational p = parse_rational(point);
  report.add("point", p.str());
  report.add("ideal", ideal_spec);
  report.add("trials", std::to_string(trials));
  report.add("seed", std::to_string(seed));
  SetSource src = parse_set(set_spec);
  auto res = i_sparse_falsify(src, p, parse_ideal(ideal_spec),
                              static_cast<int>(trials), seed);
  report.add("verdict", res.verdict);
  report.add("trials-used", std::to_string(res.trials_used));
  if (res.witness) {
    report.add("witness", to_string(*res.witness));
    report.exit_code = 1;
  }
  report.add("status", res.falsified() ? "falsified" : "ok");
  return report;
}

Report cmd_suite(const std::string& name, std::uint64_t seed, long trials, int workers) {
  Report report;
  report.command = "suite";
  if (name == "all") {
    bool ok = true;
    report.add("suite", "all");
    report.add("seed", std::to_string(seed));
    report.add("trials", std::to_string(trials));
    report.add("workers", std::to_string(workers));
    for (const auto& suite_name : suite_names()) {
      SuiteReport suite = run_suite(suite_name, seed, trials, workers);
      long failed = 0;
      for (const auto& check : suite.checks) failed += check.fail;
      report.add("suite " + suite_name, failed == 0 ? "ok" : "failed");
      ok = ok && failed == 0;
    }
    report.add("status", ok ? "ok" : "failed");
    report.exit_code = ok ? 0 : 1;
    return report;
  }
  add_suite_fields(report, run_suite(name, seed, trials, workers));
  return report;
}

Report cmd_reproduce(const std::string& target, const std::string& c, long depth,
                     std::uint64_t seed, long trials) {
  Report report;
  report.command = "reproduce";
  report.add("target", target);

  if (target == "example-1.7") {
    GapSet g(parse_rational(c));
    report.add("c", g.ratio().str());
    report.add("depth", std::to_string(depth));
    auto bounds = gap_density_bounds(g, depth);
    report.add("upper-density", render_bounds(bounds.upper_density, "two-sided"));
    report.add("upper-density-floor", (Rational(1) - Rational(1) / g.ratio()).str());
    report.add("lower-density", render_bounds(bounds.lower_density, "two-sided"));
    Rational eps(1, 10);
    SparsenessCertificate cert = sparse_certify_right(g, eps, std::max(depth, 6L));
    VerifyResult v = verify_certificate(cert);
    report.add("certificate-epsilon", eps.str());
    report.add("certificate-h", cert.h.str());
    report.add("certificate-accepted", v.accepted ? "true" : "false");
    report.add("status", v.accepted ? "ok" : "failed");
    report.exit_code = v.accepted ? 0 : 1;
    return report;
  }

  if (target == "section-3-example") {
    GapSet g(parse_rational(c));
    report.add("c", g.ratio().str());
    report.add("depth", std::to_string(depth));
    std::vector<WindowFamily> fams{WindowFamily::right_geometric(Rational(0), g.ratio())};
    auto enc = i_density_enclosure(SetSource{g}, Rational(0), Ideal::density_zero, fams,
                                   depth);
    report.add("upper-i-density", render_bounds(enc.upper.bounds, to_string(enc.upper.side)));
    report.add("positive-constant", enc.upper.bounds.lo.str());
    bool ok = enc.upper.bounds.lo >= Rational(1) - Rational(1) / g.ratio() &&
              enc.upper.bounds.lo > Rational(0);
    report.add("status", ok ? "ok" : "failed");
    report.exit_code = ok ? 0 : 1;
    return report;
  }

  if (target == "lemma-2.5") {
    add_suite_fields(report, run_suite("ilimit-arithmetic", seed, trials, 1));
    return report;
  }

  if (target == "theorem-1.1") {
    add_suite_fields(report, run_suite("phi-null-difference", seed, trials, 1));
    return report;
  }

  throw input_error("unknown reproduce target '" + target +
                    "'; known targets: example-1.7, section-3-example, lemma-2.5, "
                    "theorem-1.1");
}

}  // namespace idens
