#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "idens/commands.hpp"
#include "idens/errors.hpp"
#include "idens/suites.hpp"

namespace {

struct GlobalOptions {
  std::string format = "text";
  std::string out_file;
};

int emit(const idens::Report& report, const GlobalOptions& opts, double elapsed) {
  std::string rendered = opts.format == "machine"
                             ? idens::render_machine(report)
                             : idens::render_text(report, elapsed);
  if (!opts.out_file.empty()) {
    std::ofstream out(opts.out_file);
    if (!out) {
      std::cerr << "error: cannot write " << opts.out_file << "\n";
      return 2;
    }
    out << rendered;
  } else {
    std::cout << rendered;
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact densities, ideal limits and sparseness certificates"};
  app.require_subcommand(1);
  app.fallthrough();  // global --format/--out may follow the subcommand

  GlobalOptions global;
  app.add_option("--format", global.format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--out", global.out_file, "write the report to a file");

  std::string set_spec, point = "0", ideal = "fin", side = "right";
  std::string seq_spec, index_spec, limit = "0", eps = "1/10", cert_file, target;
  std::vector<std::string> families;
  long depth = 6, trials = 500;
  std::uint64_t seed = 20240101;
  int workers = 1;
  std::string suite_name;
  std::string gap_c = "2";

  auto* measure = app.add_subcommand("measure", "Lebesgue measure of an interval union");
  measure->add_option("set", set_spec)->required();

  auto* phi = app.add_subcommand("phi", "density-point set of an interval union");
  phi->add_option("set", set_spec)->required();

  auto* density = app.add_subcommand("density", "one-sided densities / gap-set enclosures");
  density->add_option("set", set_spec)->required();
  density->add_option("point", point);
  density->add_option("--depth", depth);

  auto* adens = app.add_subcommand("adens", "asymptotic density of an index set");
  adens->add_option("indexset", index_spec)->required();

  auto* ilimsup = app.add_subcommand("ilimsup", "ideal limit superior of a step sequence");
  ilimsup->add_option("sequence", seq_spec)->required();
  ilimsup->add_option("ideal", ideal);

  auto* iconv = app.add_subcommand("iconv", "ideal convergence test");
  iconv->add_option("sequence", seq_spec)->required();
  iconv->add_option("ideal", ideal);
  iconv->add_option("--limit", limit);
  iconv->add_option("--eps", eps);

  auto* idensity = app.add_subcommand("idensity", "certified ideal-density enclosures");
  idensity->add_option("set", set_spec)->required();
  idensity->add_option("point", point);
  idensity->add_option("ideal", ideal);
  idensity->add_option("--family", families, "window family (repeatable)");
  idensity->add_option("--depth", depth);

  auto* scheck = app.add_subcommand("sparse-check", "one-sided sparseness trichotomy");
  scheck->add_option("set", set_spec)->required();
  scheck->add_option("point", point);
  scheck->add_option("--side", side);

  auto* scert = app.add_subcommand("sparse-certify", "emit a sparseness certificate");
  scert->add_option("set", set_spec)->required();
  scert->add_option("--eps", eps);
  scert->add_option("--depth", depth);
  scert->add_option("--cert-out", cert_file, "certificate file to write");

  auto* sverify = app.add_subcommand("sparse-verify", "verify a certificate file");
  sverify->add_option("certificate", cert_file)->required();

  auto* falsify = app.add_subcommand("falsify", "search for an anti-sparseness witness");
  falsify->add_option("set", set_spec)->required();
  falsify->add_option("point", point);
  falsify->add_option("ideal", ideal);
  falsify->add_option("--trials", trials);
  falsify->add_option("--seed", seed);

  auto* suite = app.add_subcommand("suite", "run a randomized property suite");
  std::string names;
  for (const auto& n : idens::suite_names()) names += (names.empty() ? "" : ", ") + n;
  suite->add_option("name", suite_name, "one of: all, " + names)->required();
  suite->add_option("--seed", seed);
  suite->add_option("--trials", trials);
  suite->add_option("--workers", workers);

  auto* reproduce = app.add_subcommand("reproduce", "run a named reproduction scenario");
  reproduce->add_option("target", target,
                        "example-1.7 | section-3-example | lemma-2.5 | theorem-1.1")
      ->required();
  reproduce->add_option("--c", gap_c);
  reproduce->add_option("--depth", depth);
  reproduce->add_option("--seed", seed);
  reproduce->add_option("--trials", trials);

  CLI11_PARSE(app, argc, argv);

  auto started = std::chrono::steady_clock::now();
  try {
    idens::Report report;
    if (*measure) report = idens::cmd_measure(set_spec);
    else if (*phi) report = idens::cmd_phi(set_spec);
    else if (*density) report = idens::cmd_density(set_spec, point, depth);
    else if (*adens) report = idens::cmd_adens(index_spec);
    else if (*ilimsup) report = idens::cmd_ilimsup(seq_spec, ideal);
    else if (*iconv) report = idens::cmd_iconv(seq_spec, ideal, limit, eps);
    else if (*idensity) report = idens::cmd_idensity(set_spec, point, ideal, families, depth);
    else if (*scheck) report = idens::cmd_sparse_check(set_spec, point, side);
    else if (*scert) report = idens::cmd_sparse_certify(set_spec, eps, depth, cert_file);
    else if (*sverify) report = idens::cmd_sparse_verify(cert_file);
    else if (*falsify) report = idens::cmd_falsify(set_spec, point, ideal, trials, seed);
    else if (*suite) report = idens::cmd_suite(suite_name, seed, trials, workers);
    else if (*reproduce) report = idens::cmd_reproduce(target, gap_c, depth, seed, trials);
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return emit(report, global, elapsed);
  } catch (const idens::input_error& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return 2;
  }
}
