#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "heseq/constants.hpp"
#include "heseq/reference_data.hpp"
#include "heseq/types.hpp"

namespace heseq {

// One comparison row: experiment vs the corrected interpolation and
// Hylleraas-series energies.
struct TableRow {
  int z = 0;
  std::string symbol;
  double e_exp = 0.0;
  double e_interp_corrected = 0.0;
  double e_hylleraas_corrected = 0.0;
};

// Relative differences (E_e - E_t)/E_e with corrected theory totals.
struct FigureRow {
  int z = 0;
  double rel_diff_interp = 0.0;
  double rel_diff_hylleraas = 0.0;
};

// One sample of the correlated-model energy surface.
struct ScanRow {
  double a = 0.0;
  double z = 0.0;
  int n = 1;
  double e = 0.0;
};

std::vector<TableRow> table_rows(const ReferenceSet& refs, InterpolationExponent p = {},
                                 const PhysicalConstants& pc = {});

std::vector<FigureRow> figure_rows(const ReferenceSet& refs, InterpolationExponent p = {},
                                   const PhysicalConstants& pc = {});

// Log-spaced surface scan over a in [a_min, a_max].
std::vector<ScanRow> scan_rows(NuclearCharge z, PrincipalQuantumNumber n, double a_min,
                               double a_max, int count);

// Deterministic CSV emission, 12 significant digits, headers matching the
// row field names; identical inputs give byte-identical output.
void write_csv(std::ostream& out, const std::vector<TableRow>& rows);
void write_csv(std::ostream& out, const std::vector<FigureRow>& rows);
void write_csv(std::ostream& out, const std::vector<ScanRow>& rows);

// 12-significant-digit number formatting shared by all CSV output.
std::string format_number(double v);

}  // namespace heseq
