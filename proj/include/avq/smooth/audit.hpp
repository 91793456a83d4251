#pragma once

#include "avq/catalog/scenario.hpp"

#include <optional>
#include <random>

namespace avq {

/// Stabilizer of one point and the part of it generated by pseudoreflections.
/// For scenarios with a kernel Delta the stabilizer lives in Delta ⋊ G and
/// elements carry their translation.
struct StabilizerReport {
  TorsionPoint point;
  std::uint64_t s0_order = 0;
  std::uint64_t p0_order = 0;
  /// Greedy generating set in canonical element order.
  std::vector<AffineElement> generators;
  std::vector<AffineElement> pseudoreflections;
  /// All of S_0, sorted by linear part.
  std::vector<AffineElement> elements;

  bool smooth() const { return s0_order == p0_order; }
};

/// x is given in the coordinates of B (the scenario's own lattice).
StabilizerReport point_stabilizer_report(const Scenario &s, const TorsionPoint &x);

/// Translate x0 + T of B with the subgroup fixing it pointwise.
struct Stratum {
  TorsionPoint base;
  LatticeBasis direction;
  std::vector<AffineElement> generic_stabilizer;
  std::uint64_t p0_order = 0;
  std::size_t depth = 0;
  /// Canonical encoding of the set x0 + T.
  std::string key;
  /// Torsion level of the image of x0 in the torus transverse to T.
  std::int64_t level = 1;

  std::size_t complex_dim() const { return direction.rank() / 2; }
  std::uint64_t h_order() const { return generic_stabilizer.size(); }
  bool smooth() const { return h_order() == p0_order; }
};

/// Canonical key of x0 + T and the level of x0 transverse to T.
std::pair<std::string, std::int64_t> stratum_key(const TorsionPoint &x0, const LatticeBasis &t);

/// Connected components of Fix(g) on B (linear g, Delta ignored).
std::vector<Stratum> fixed_locus_components(const Scenario &s, const LinearElement &g);

/// {(delta, g) : (1 - g) T = 0 and (1 - g) x0 in Delta}; for scenarios
/// without Delta the translations are all zero.
std::vector<AffineElement> stratum_generic_stabilizer(const Scenario &s, const TorsionPoint &x0,
                                                      const LatticeBasis &t);

/// Fills generic_stabilizer, p0_order, key and level.
Stratum make_stratum(const Scenario &s, const TorsionPoint &x0, const LatticeBasis &t, std::size_t depth = 0);

/// Stabilizer of a sampled point x0 + T * v with v of prime denominator;
/// resamples (up to `attempts`) while it exceeds the generic stabilizer.
std::vector<AffineElement> sampled_generic_stabilizer(const Scenario &s, const Stratum &stratum, std::mt19937_64 &rng,
                                                      std::int64_t prime = 97, int attempts = 8);

struct AuditOptions {
  std::size_t depth = 3;
  /// Torsion levels checked exhaustively (every point of A[N]).
  std::vector<int> torsion_levels{4};
  /// Cap on |A[N]| for the exhaustive pass.
  std::uint64_t torsion_cap = 20'000'000;
  /// Also compare each stratum's generic stabilizer with a sampled point.
  bool sample_check = false;

  /// Depth 3, N = 4, plus N = 3 for m = 3.
  static AuditOptions defaults_for(const Scenario &s);
};

struct AuditVerdict {
  bool smooth = true;
  /// Strata closure reached a fixed point within the depth bound.
  bool complete = false;
  std::optional<Stratum> witness;
  std::optional<StabilizerReport> point_witness;
  std::vector<Stratum> nonsmooth_strata;
  std::size_t strata_orbits = 0;
  std::size_t depth_reached = 0;
  std::vector<int> torsion_levels;
  std::size_t torsion_orbits = 0;
  std::size_t torsion_nonsmooth = 0;
  /// Label of the chart the audit ran on (A = B/Delta when Delta != 0).
  std::string chart;

  std::string verdict_name() const { return smooth ? "SmoothAudited" : "NotSmooth"; }
  std::string coverage() const;
};

/// Audits A = B/Delta (the quotient chart) with the given options.
AuditVerdict smoothness_audit(const Scenario &s, const AuditOptions &opt);

/// Points of Fix(g) off the identity component, from (g~ - I)^{-1} on the
/// Q-orthogonal complement of ker(g - I).
std::vector<TorsionPoint> remark_candidates(const Scenario &s, const LinearElement &g, const MatQ &q);

struct TranslationWitness {
  LinearElement tau;
  TorsionPoint z;
};

/// z with z - tau(z) == t for tau without eigenvalue one.
TranslationWitness solve_translation_witness(const Scenario &s, const TorsionPoint &t);

/// Order of the group generated by the linear parts.
std::uint64_t generated_order(const std::vector<AffineElement> &elements, std::size_t dim);

}  // namespace avq
