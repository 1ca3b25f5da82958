#include "heseq/report.hpp"

#include <cstdio>

#include "heseq/corrections.hpp"
#include "heseq/kernels.hpp"
#include "heseq/optimize.hpp"

namespace heseq {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<TableRow> table_rows(const ReferenceSet& refs, InterpolationExponent p,
                                 const PhysicalConstants& pc) {
  std::vector<TableRow> rows;
  rows.reserve(refs.size());
  for (const auto& rec : refs.records()) {
    const NuclearCharge z{static_cast<double>(rec.z)};
    const auto interp = corrected_energy(MethodId::interpolation, z, p, pc);
    const auto hyll = corrected_energy(MethodId::hylleraas, z, p, pc);
    rows.push_back({rec.z, rec.symbol, rec.e_exp, interp.total.value, hyll.total.value});
  }
  return rows;
}

std::vector<FigureRow> figure_rows(const ReferenceSet& refs, InterpolationExponent p,
                                   const PhysicalConstants& pc) {
  std::vector<FigureRow> rows;
  rows.reserve(refs.size());
  for (const auto& row : table_rows(refs, p, pc)) {
    rows.push_back({row.z, (row.e_exp - row.e_interp_corrected) / row.e_exp,
                    (row.e_exp - row.e_hylleraas_corrected) / row.e_exp});
  }
  return rows;
}

std::vector<ScanRow> scan_rows(NuclearCharge z, PrincipalQuantumNumber n, double a_min,
                               double a_max, int count) {
  if (!(a_min > 0.0) || !(a_min < a_max))
    throw validation_error("scan grid needs 0 < a_min < a_max, got [" + std::to_string(a_min) +
                           ", " + std::to_string(a_max) + "]");
  if (count < 2) throw validation_error("scan grid needs count >= 2, got " + std::to_string(count));

  const std::vector<double> grid = log_spaced(a_min, a_max, count);
  std::vector<double> energy(grid.size());
  kernels::bohr_energy_batch(grid, z.value(), n.value(), energy);

  std::vector<ScanRow> rows;
  rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    rows.push_back({grid[i], z.value(), n.value(), energy[i]});
  return rows;
}

void write_csv(std::ostream& out, const std::vector<TableRow>& rows) {
  out << "z,symbol,e_exp,e_interp_corrected,e_hylleraas_corrected\n";
  for (const auto& r : rows)
    out << r.z << ',' << r.symbol << ',' << format_number(r.e_exp) << ','
        << format_number(r.e_interp_corrected) << ',' << format_number(r.e_hylleraas_corrected)
        << '\n';
}

void write_csv(std::ostream& out, const std::vector<FigureRow>& rows) {
  out << "z,rel_diff_interp,rel_diff_hylleraas\n";
  for (const auto& r : rows)
    out << r.z << ',' << format_number(r.rel_diff_interp) << ','
        << format_number(r.rel_diff_hylleraas) << '\n';
}

void write_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "a,z,n,e\n";
  for (const auto& r : rows)
    out << format_number(r.a) << ',' << format_number(r.z) << ',' << r.n << ','
        << format_number(r.e) << '\n';
}

}  // namespace heseq
