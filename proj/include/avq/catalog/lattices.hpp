#pragma once

#include "avq/catalog/scenario.hpp"

namespace avq {

struct RootLatticeResult {
  /// Lambda^0 in the scenario's lattice coordinates.
  LatticeBasis lattice;
  /// [Lambda : Lambda^0].
  Int index;
  std::size_t root_lines = 0;
  /// Lines found from all pseudoreflections of the closed group, rather than
  /// from the orbits of the generators' lines.
  bool from_enumeration = false;
  /// Same group on C^n / Lambda^0, in coordinates of the HNF basis.
  Scenario scenario;
};

/// Root line of a pseudoreflection: Lambda ∩ (image of g - 1), saturated.
LatticeBasis root_line(const LinearElement &g);

/// Sum of Lambda ∩ L over all root lines L. Groups of order at most
/// `enumeration_cap` are enumerated; larger ones use the G-orbits of the
/// generators' root lines. Throws ValidationError when the result is not of
/// full rank.
RootLatticeResult root_lattice(const Scenario &s, std::size_t enumeration_cap = 2'000'000);

struct IntermediateLattice {
  std::string label;
  /// Basis columns in the coordinates of Lambda^0.
  MatQ basis;
  /// [Lambda : Lambda^0].
  Int index;
};

struct SMatrixResult {
  /// S = n I - sum R_i on the lattice.
  MatZ s;
  /// det of S on Z^{2n}; equals |det_C S|^2 up to sign.
  Int det_real;
  /// Basis of S^{-1} Lambda^0 in Lambda^0 coordinates.
  MatQ s_inverse;
  std::vector<Int> quotient_factors;
  /// G acts trivially on S^{-1} Lambda^0 / Lambda^0.
  bool action_trivial = true;
  /// Every G-stable lattice between Lambda^0 and S^{-1} Lambda^0, including
  /// both ends; ordered by index, then basis.
  std::vector<IntermediateLattice> lattices;
};

/// The scenario's lattice is taken as Lambda^0. Requires exactly n designated
/// pseudoreflections; `check_generation` also verifies that they generate G
/// (by closure, when the order is within `closure_cap`).
SMatrixResult s_matrix_and_intermediate_lattices(const Scenario &s, bool check_generation = true,
                                                 std::size_t closure_cap = 10'000'000,
                                                 std::size_t quotient_cap = 4096);

/// Lattice generated by Lambda^0 and rational vectors (Lambda^0 coordinates).
MatQ lattice_with(std::size_t dim, const std::vector<VecQ> &extra);

/// Identity basis with column j replaced by v (a basis of <Lambda^0, v> when
/// the j-th coordinate of v is 1/[<Lambda^0, v> : Lambda^0]).
MatQ slot_basis(const MatQ &basis, std::size_t slot, const VecQ &v);

/// Basis of an intermediate lattice from a spec such as "root", "d1@1",
/// "d1+d2@2" or "d1@1,d2@2": each term puts an integer combination of named
/// vectors into the given (1-based) slot of the running basis. The result is
/// checked against the lattice generated by Lambda^0 and the vectors.
MatQ lattice_from_spec(const Scenario &s, const std::string &spec);

}  // namespace avq
