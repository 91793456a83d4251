#pragma once

#include "avq/catalog/scenario.hpp"
#include "avq/exact/cyclotomic.hpp"

#include <filesystem>

namespace avq {

/// Contents of a sporadic-group data file. Complex coordinates are those of
/// the file; the lattice is given by 2n vectors (e_1..e_n, then tau_i e_i).
struct SporadicData {
  int st_number = 0;
  std::size_t n = 0;
  unsigned conductor = 1;
  std::uint64_t order = 0;
  std::vector<CycMatrix> generators;
  std::vector<CycVector> lattice;
  /// Purely imaginary u with u^2 = -c rational; fixes the complex structure.
  Cyclotomic complex_unit;
  /// Rational combinations of the lattice basis.
  std::map<std::string, VecQ> extra_vectors;
  std::vector<std::size_t> designated_reflections;
  std::string source;
  std::string checksum;
};

/// 64-bit FNV-1a of `text`, as 16 hex digits.
std::string fnv1a_hex(std::string_view text);

/// Parses and validates a data file (checksum, unimodularity, finite order,
/// commuting with the complex structure). Throws ValidationError naming the
/// violated invariant.
SporadicData load_sporadic_data(const std::filesystem::path &path);

/// Scenario on C^n / Lambda^0 in the coordinates of the file's lattice basis.
Scenario sporadic_scenario(const SporadicData &data);

/// load_sporadic_data + sporadic_scenario + validate.
Scenario load_sporadic(const std::filesystem::path &path);

/// Data directory: $AVQ_DATA_DIR, else the compiled-in default.
std::filesystem::path default_data_dir();
/// <data_dir>/sporadic/stNN.json
std::filesystem::path sporadic_path(const std::filesystem::path &data_dir, int st_number);

}  // namespace avq
