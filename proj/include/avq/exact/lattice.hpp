#pragma once

#include "avq/exact/normal_form.hpp"

#include <string>

namespace avq {

/// Integer lattice in Z^d given by linearly independent basis columns.
///
/// The stored basis is always the column HNF of whatever generated the
/// lattice, so two LatticeBasis values describe the same lattice exactly when
/// they compare equal.
class LatticeBasis {
public:
  LatticeBasis() = default;
  /// Zero lattice in Z^d.
  explicit LatticeBasis(std::size_t ambient) : basis_(ambient, 0) {}

  /// Lattice spanned by the columns of `generators`, which may be dependent.
  static LatticeBasis from_generators(const MatZ &generators);
  static LatticeBasis full(std::size_t ambient);

  std::size_t ambient() const { return basis_.rows(); }
  std::size_t rank() const { return basis_.cols(); }
  bool is_zero() const { return rank() == 0; }
  bool is_full() const { return rank() == ambient(); }
  const MatZ &basis() const { return basis_; }

  bool contains(std::span<const Int> v) const;
  bool contains(const LatticeBasis &other) const;
  /// Coordinates of a vector of the rational span with respect to the basis.
  VecQ coordinates(std::span<const Rat> v) const;
  /// True when v lies in the Q-span.
  bool spans(std::span<const Rat> v) const;

  friend bool operator==(const LatticeBasis &, const LatticeBasis &) = default;

  std::string key() const;

private:
  MatZ basis_;
};

/// Smallest saturated lattice with the same rational span.
LatticeBasis saturate(const LatticeBasis &lattice);
bool is_saturated(const LatticeBasis &lattice);

struct MeetJoin {
  LatticeBasis sum;
  LatticeBasis intersection;
};

MeetJoin lattice_meet_join(const LatticeBasis &a, const LatticeBasis &b);

/// Rational span of a lattice, as a saturated lattice (same thing).
LatticeBasis span_intersection(const LatticeBasis &a, const LatticeBasis &b);

/// Structure of the finite group big / small.
struct QuotientStructure {
  /// Invariant factors greater than one, d_1 | d_2 | ...
  std::vector<Int> invariant_factors;
  /// One element of `big` per coset, in ambient coordinates.
  std::vector<VecZ> representatives;
  /// The same cosets as torsion points: coordinates with respect to the
  /// basis of `small`, each reduced into [0, 1).
  std::vector<VecQ> torsion_coordinates;
  Int order() const;
};

/// Throws ValidationError when small is not contained in big or ranks differ.
/// `enumerate_cap` bounds the number of cosets listed (the factors are always
/// returned).
QuotientStructure quotient_structure(const LatticeBasis &big, const LatticeBasis &small,
                                     std::size_t enumerate_cap = 1'000'000);

Int lattice_index(const LatticeBasis &big, const LatticeBasis &small);

/// Solutions s in R^k / Z^k of m * s == c (mod Z^d), for integer m (d x k)
/// and rational c. The solution set is a finite union of translates of one
/// subtorus; `direction` is a saturated basis of that subtorus and
/// `component_count` the number of translates.
struct ModOneSolution {
  bool solvable = false;
  MatZ direction;
  Int component_count = 0;
  /// One point per component, as exact rational coordinates in [0, 1).
  std::vector<VecQ> points;
  /// False when the components were not all listed because of the cap.
  bool complete = true;
};

ModOneSolution solve_mod_one(const MatZ &m, std::span<const Rat> c,
                             std::size_t enumerate_cap = 1'000'000);

/// Lattice in Q^d, stored as (1/denominator) * integer lattice with the
/// smallest admissible denominator.
class RationalLattice {
public:
  RationalLattice() = default;
  static RationalLattice from_generators(const MatQ &generators);
  static RationalLattice from_integer(const LatticeBasis &lattice);

  const Int &denominator() const { return den_; }
  const LatticeBasis &scaled() const { return scaled_; }
  MatQ basis() const;
  std::size_t rank() const { return scaled_.rank(); }
  std::size_t ambient() const { return scaled_.ambient(); }
  bool contains(std::span<const Rat> v) const;
  bool contains(const RationalLattice &other) const;

  friend bool operator==(const RationalLattice &, const RationalLattice &) = default;

private:
  Int den_ = 1;
  LatticeBasis scaled_;
};

}  // namespace avq
