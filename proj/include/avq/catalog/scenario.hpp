#pragma once

#include "avq/torus/torus.hpp"

#include <map>
#include <optional>
#include <string>

namespace avq {

/// A torus B = R^{2n}/Z^{2n} with a finite group G fixing the origin and,
/// optionally, a G-stable finite subgroup Delta of translations. The pair
/// describes A = B/Delta with the induced G-action.
struct Scenario {
  std::string label;
  ComplexTorus torus;
  FiniteMatrixGroup group;
  std::optional<FiniteSubgroup> delta;
  /// Human-readable description of the coordinate basis.
  std::string basis_note;

  /// G(m,p,n) family parameters when applicable (0 otherwise).
  int m = 0, p = 0, n = 0;
  /// Shephard-Todd number for sporadic data (0 otherwise).
  int st_number = 0;
  /// Indices into group.generators() used for the S matrix.
  std::vector<std::size_t> designated_reflections;
  /// Named lattice vectors (e.g. d1, d2) in the lattice coordinates.
  std::map<std::string, VecQ> named_vectors;

  bool is_affine() const { return delta && delta->order() > 1; }
  std::size_t dim() const { return group.dim(); }

  /// Generators preserve the lattice, commute with the complex structure,
  /// have finite order; Delta is G-stable. Throws ValidationError.
  void validate() const;
};

/// A = B/Delta in its own lattice coordinates.
struct QuotientChart {
  Scenario scenario;
  /// Columns: basis of Lambda_A in B-coordinates.
  MatQ lattice;
  /// Inverse of `lattice`: B-coordinates to A-coordinates.
  MatQ to_quotient;

  TorsionPoint map_point(const TorsionPoint &x_on_b) const;
  LatticeBasis map_subtorus(const LatticeBasis &t_on_b) const;
};

/// Identity chart when Delta is trivial.
QuotientChart quotient_chart(const Scenario &s);

/// Same torus and group with Lambda replaced by the lattice spanned by the
/// columns of `lattice` (given in current coordinates, must be G-stable).
Scenario rebase(const Scenario &s, const MatQ &lattice, std::string label);

}  // namespace avq
