// heseq — ground-state energies of two-electron atoms and ions from the
// correlated-model family of closed forms, with relativistic and QED
// corrections, experimental reference comparison and exponent fitting.
// All subcommands emit deterministic, plot-ready CSV.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "heseq/bohr.hpp"
#include "heseq/corrections.hpp"
#include "heseq/exponent_fit.hpp"
#include "heseq/report.hpp"

namespace {

using namespace heseq;

struct Options {
  PhysicalConstants pc;
  std::string out_path;
  std::string data_path;

  double z = 0.0;
  std::string method;
  double p = InterpolationExponent::kDefault;
  bool no_corrections = false;

  int n = 1;
  double a_min = 0.0;
  double a_max = 0.0;
  int count = 0;

  std::vector<int> exclude_z;
  bool absolute_residuals = false;
};

ReferenceSet load_refs(const Options& opt) {
  if (!opt.data_path.empty()) return load_reference_file(opt.data_path, opt.pc);
  return bundled_reference(opt.pc);
}

ReferenceSet apply_exclusions(ReferenceSet refs, const std::vector<int>& exclude) {
  if (exclude.empty()) return refs;
  std::vector<IonRecord> kept;
  for (const auto& rec : refs.records()) {
    bool drop = false;
    for (const int z : exclude) drop = drop || (rec.z == z);
    if (!drop) kept.push_back(rec);
  }
  return ReferenceSet{std::move(kept)};  // validation error if nothing is left
}

void run_energy(std::ostream& out, const Options& opt) {
  const MethodId method = parse_method(opt.method);
  const NuclearCharge z{opt.z};
  const InterpolationExponent p{opt.p};
  const bool has_p = method == MethodId::interpolation;
  if (opt.no_corrections) {
    const EnergyHartree e = evaluate(method, z, p);
    out << "method,z,p,energy\n";
    out << method_name(method) << ',' << format_number(opt.z) << ','
        << (has_p ? format_number(opt.p) : std::string{}) << ',' << format_number(e.value) << '\n';
    return;
  }
  const EnergyBreakdown b = corrected_energy(method, z, p, opt.pc);
  out << "method,z,p,base,relativistic,qed,total\n";
  out << method_name(method) << ',' << format_number(opt.z) << ','
      << (has_p ? format_number(opt.p) : std::string{}) << ',' << format_number(b.base.value)
      << ',' << format_number(b.relativistic.value) << ',' << format_number(b.qed.value) << ','
      << format_number(b.total.value) << '\n';
}

void run_table(std::ostream& out, const Options& opt) {
  write_csv(out, table_rows(load_refs(opt), InterpolationExponent{opt.p}, opt.pc));
}

void run_figure(std::ostream& out, const Options& opt) {
  write_csv(out, figure_rows(load_refs(opt), InterpolationExponent{opt.p}, opt.pc));
}

void run_fit(std::ostream& out, const Options& opt) {
  const ReferenceSet refs = apply_exclusions(load_refs(opt), opt.exclude_z);
  const auto weighting =
      opt.absolute_residuals ? ResidualWeighting::absolute : ResidualWeighting::relative;
  const FitResult fit = fit_global_p(refs, !opt.no_corrections, weighting, opt.pc);
  for (const auto& line : fit.excluded) out << "# excluded " << line << '\n';
  out << "# p = " << format_number(fit.p.value()) << '\n';
  out << "# objective = " << format_number(fit.objective) << '\n';
  out << "# evaluations = " << fit.evaluations << '\n';
  out << "z,residual\n";
  for (const auto& r : fit.residuals) out << r.z << ',' << format_number(r.residual) << '\n';
}

void run_scan(std::ostream& out, const Options& opt) {
  write_csv(out, scan_rows(NuclearCharge{opt.z}, PrincipalQuantumNumber{opt.n}, opt.a_min,
                           opt.a_max, opt.count));
}

void run_threshold(std::ostream& out, const Options&) {
  out << "z0_closed_form,z0_numeric\n";
  out << format_number(critical_charge().value()) << ','
      << format_number(critical_charge_numeric().value()) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-electron ground-state energies: correlated model, closed forms, corrections"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--alpha", opt.pc.alpha, "fine-structure constant override");
  app.add_option("--hartree-ev", opt.pc.hartree_ev, "Hartree-to-eV factor override");
  app.add_option("--out", opt.out_path, "write CSV to FILE instead of stdout");

  auto* energy = app.add_subcommand("energy", "one model energy, optionally corrected");
  energy->add_option("--z", opt.z, "nuclear charge")->required();
  energy->add_option("--method", opt.method,
                     "bohr|asymptote|variational|perturbation|interpolation|hylleraas")
      ->required();
  energy->add_option("--p", opt.p, "interpolation exponent");
  energy->add_flag("--no-corrections", opt.no_corrections, "base energy only");

  auto* table = app.add_subcommand("table", "experiment vs corrected theory, one row per ion");
  table->add_option("--data", opt.data_path, "reference CSV (default: bundled set)");
  table->add_option("--p", opt.p, "interpolation exponent");

  auto* figure = app.add_subcommand("figure", "relative differences (E_e - E_t)/E_e");
  figure->add_option("--data", opt.data_path, "reference CSV (default: bundled set)");
  figure->add_option("--p", opt.p, "interpolation exponent");

  auto* fit = app.add_subcommand("fit", "least-squares fit of the interpolation exponent");
  fit->add_option("--data", opt.data_path, "reference CSV (default: bundled set)");
  fit->add_flag("--no-corrections", opt.no_corrections, "fit against raw model energies");
  fit->add_option("--exclude-z", opt.exclude_z, "skip these z values")->delimiter(',');
  fit->add_flag("--absolute-residuals", opt.absolute_residuals,
                "weight residuals in Hartree instead of relative units");

  auto* scan = app.add_subcommand("scan", "correlated-model energy surface over a");
  scan->add_option("--z", opt.z, "nuclear charge")->required();
  scan->add_option("--n", opt.n, "principal quantum number");
  scan->add_option("--a-min", opt.a_min, "grid start")->required();
  scan->add_option("--a-max", opt.a_max, "grid end")->required();
  scan->add_option("--count", opt.count, "grid points")->required();

  auto* threshold = app.add_subcommand("threshold", "critical charge, closed form and numeric");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    opt.pc.validate();

    std::ostringstream buf;
    if (energy->parsed()) run_energy(buf, opt);
    if (table->parsed()) run_table(buf, opt);
    if (figure->parsed()) run_figure(buf, opt);
    if (fit->parsed()) run_fit(buf, opt);
    if (scan->parsed()) run_scan(buf, opt);
    if (threshold->parsed()) run_threshold(buf, opt);

    if (opt.out_path.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream file(opt.out_path, std::ios::binary);
      if (!file) throw invalid_input_error("cannot open output file '" + opt.out_path + "'");
      file << buf.str();
    }
    return 0;
  } catch (const heseq::error& e) {
    std::cerr << "error[" << heseq::error::kind_name(e.kind()) << "]: " << e.what() << '\n';
    return heseq::error::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << '\n';
    return 4;
  }
}
