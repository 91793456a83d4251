#pragma once

#include "avq/smooth/audit.hpp"

#include <filesystem>
#include <iosfwd>

namespace avq {

/// "paper1", "paper2", "prop33", "prop36".
std::vector<std::string> table_names();

struct TableOptions {
  std::filesystem::path data_dir;
  /// Also run rows marked large or optional.
  bool large = false;
  std::ostream *progress = nullptr;
};

struct TableRow {
  std::vector<std::string> expected;
  std::vector<std::string> computed;
  bool skipped = false;
  double seconds = 0;
  std::string error;

  bool ok() const { return skipped || (error.empty() && expected == computed); }
};

struct TableResult {
  std::string name;
  std::vector<std::string> header;
  std::vector<TableRow> rows;
  /// Golden file the rows were compared with.
  std::filesystem::path golden;

  bool clean() const;
};

/// Recomputes a table. For paper1/paper2 the golden file drives which rows
/// exist; prop33/prop36 rows come from the witness constructions.
TableResult run_table(const std::string &which, const TableOptions &opt);

void print_table(const TableResult &t, std::ostream &os);
/// Writes the computed cells as the new golden file.
void write_golden(const TableResult &t, const std::filesystem::path &data_dir);

/// Golden TSV: '#' header line with column names, then rows.
std::vector<std::vector<std::string>> read_tsv(const std::filesystem::path &path,
                                               std::vector<std::string> *header = nullptr);

/// Monomial element of E_m^n in the form "(z,z^2,1)" or "(1,1,1)[2,1,3]"
/// (exponents of zeta_m per coordinate, then the permutation if any).
std::string monomial_str(const LinearElement &g, int m);
std::string affine_monomial_str(const AffineElement &a, int m);

/// Stabilizer orders of a point of a sporadic lattice.
struct SporadicRow {
  std::string data;
  std::string lattice_spec;
  std::string point;
};
StabilizerReport sporadic_row_report(const std::filesystem::path &data_dir, const SporadicRow &row);

}  // namespace avq
