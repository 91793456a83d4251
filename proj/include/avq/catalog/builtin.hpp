#pragma once

#include "avq/catalog/scenario.hpp"

namespace avq {

/// ζ_m^{a_1} ⊕ ... ⊕ ζ_m^{a_n} on E_m^n.
LinearElement diagonal_element(int m, const std::vector<int> &exponents);
/// Coordinate permutation: coordinate j is sent to perm[j].
LinearElement permutation_element(const std::vector<int> &perm);
/// Point of E_m^n from per-coordinate (re, zeta) pairs.
TorsionPoint curve_point(const std::vector<std::pair<Rat, Rat>> &coords);

/// G(m,p,n) acting coordinatewise on E_m^n.
Scenario build_gmpn(int m, int p, int n);
/// Example (a): G(m,1,n) on E_m^n.
Scenario build_example_a(int m, int n);
/// Example (b): S_{n+1} on {x in E^{n+1} : sum x = 0}, E = C/Z[i], in the
/// basis (e_k - e_{k+1}) ⊗ {1, i}.
Scenario build_example_b(int n);

/// The zeta_m-invariant points of E_m: generators of E_0.
std::vector<TorsionPoint> invariant_curve_points(int m);

/// G(m,p,n) on E_m^n with Delta = {x in E_0^n : sum x = 0}. Throws for m = 6.
Scenario build_hyperplanar_delta(int m, int p, int n);
/// G(2,p,n) with Delta generated by the G-orbit of (t,t,0,...), t = (1/2,0):
/// an incomplete hyperplanar kernel.
Scenario build_incomplete_hyperplanar(int p, int n);
/// G(m,p,n) with the diagonal Delta = <(s,...,s)> for s a zeta_m-invariant
/// point of order 2 (m = 2, 4) or 3 (m = 3).
Scenario build_diagonal_delta(int m, int p, int n);
/// Example (b) for n with Delta = <(t,...,t)>, t of order n+1.
Scenario build_sn_diagonal_delta(int n);

/// A point or stratum from one of the witness constructions, with the
/// stabilizer generators the construction predicts.
struct WitnessCase {
  std::string label;
  Scenario scenario;
  TorsionPoint base;
  /// Direction of the generic tail; zero lattice for a point.
  LatticeBasis direction;
  /// Predicted generators of the (affine) stabilizer.
  std::vector<AffineElement> expected;
};

/// which: "prop33", "prop35" or "prop36". Throws ValidationError when the
/// construction does not apply to (m,p,n).
WitnessCase witness_points(int m, int p, int n, const std::string &which);

/// Labels understood by builtin_scenario().
std::vector<std::string> builtin_labels();
/// e.g. "example-a-3-3", "example-b-3", "gmpn-3-3-3", "hyperplanar-2-2-3",
/// "incomplete-2-1-3", "diagonal-2-1-3", "sn-diagonal-3".
Scenario builtin_scenario(const std::string &label);

}  // namespace avq
