#pragma once

#include "avq/exact/lattice.hpp"
#include "avq/groups/matrix_group.hpp"
#include "avq/torus/torsion_point.hpp"

namespace avq {

/// C^n / Lambda in lattice coordinates: points are R^{2n} / Z^{2n}.
///
/// The complex structure is stored as K = multiplication by sqrt(-c) for a
/// positive integer c (K^2 = -c I). For c = 1 this is J itself; for the
/// Eisenstein curves J = K / sqrt(3) is not rational, but a real matrix
/// commutes with J exactly when it commutes with K, and the K-stable
/// subspaces are the complex ones, which is all the library needs.
class ComplexTorus {
public:
  ComplexTorus() = default;
  /// Throws ValidationError unless K^2 == -c I.
  ComplexTorus(MatQ structure, Int c, int cm_tag = 0);

  /// E_m^n with E_m = C / Z[zeta_m], coordinates (x1, zeta x1, x2, ...).
  /// m = 1 and m = 2 use the square lattice.
  static ComplexTorus cm_power(int m, std::size_t n);

  std::size_t complex_dim() const { return k_.rows() / 2; }
  std::size_t real_rank() const { return k_.rows(); }
  const MatQ &structure() const { return k_; }
  const Int &structure_square() const { return c_; }
  int cm_tag() const { return cm_; }

  bool commutes(const MatZ &m) const;
  /// The Q-span of the lattice is stable under the complex structure.
  bool is_complex(const LatticeBasis &l) const;

private:
  MatQ k_;
  Int c_ = 1;
  int cm_ = 0;
};

/// Multiplication by zeta_m on Z[zeta_m] in the basis {1, zeta_m}.
MatZ zeta_block(int m);

/// Complex subtorus: a saturated lattice with complex span.
struct Subtorus {
  LatticeBasis lattice;
  std::size_t complex_dim() const { return lattice.rank() / 2; }
  friend bool operator==(const Subtorus &, const Subtorus &) = default;
};

/// Finite subgroup of R^d / Z^d.
struct FiniteSubgroup {
  std::vector<TorsionPoint> generators;
  std::vector<Int> invariant_factors;
  /// All elements, sorted; empty when the order is above the listing cap.
  std::vector<TorsionPoint> elements;

  Int order() const;
  bool listed() const { return !elements.empty(); }
  bool contains(const TorsionPoint &p) const;

  /// Subgroup generated by the given points (origin allowed).
  static FiniteSubgroup generated_by(std::size_t dim, std::vector<TorsionPoint> points,
                                     std::size_t list_cap = 1'000'000);
};

/// Saturated image f(Z^{2n}); f must commute with the complex structure.
Subtorus endo_image_subtorus(const ComplexTorus &x, const MatZ &f);

/// (Lambda cap (V1 + V2)) / (Lambda1 + Lambda2) realized as points lying on
/// both subtori. Throws ValidationError if the spans meet.
FiniteSubgroup subtorus_intersection_group(const Subtorus &a, const Subtorus &b);

/// Sum over the closure of g^T g.
MatQ invariant_form(const FiniteMatrixGroup &g);
/// Sum over the closure of g^T P g with P = I + K^T K / c; also satisfies
/// K^T Q K = c Q, so orthogonal complements of complex subspaces are complex.
MatQ hermitian_invariant_form(const ComplexTorus &x, const FiniteMatrixGroup &g);

/// Saturation of the Q-orthogonal complement.
Subtorus complementary_subtorus(const Subtorus &t, const MatQ &q);

/// Lambda_A / Lambda_B as points of R^d / Lambda_B. Both lattices are given
/// by basis columns in a common coordinate system.
FiniteSubgroup isogeny_kernel(const MatQ &lambda_a, const MatQ &lambda_b);

struct ReflectionDecomposition {
  std::vector<Subtorus> factors;
  /// Index of the sum of the factor lattices in Z^{2n}.
  Int kernel_order;
};

/// Splits the torus into the subtori spanned by the G-orbits of the E_sigma.
/// Throws ValidationError when G has a nonzero fixed vector.
ReflectionDecomposition decompose_by_reflection_orbits(const ComplexTorus &x, const FiniteMatrixGroup &g);

/// E_sigma = im(1 - sigma) and D_sigma = im(1 + sigma + ... + sigma^{r-1}).
Subtorus reflection_curve(const ComplexTorus &x, const LinearElement &sigma);
Subtorus reflection_complement(const ComplexTorus &x, const LinearElement &sigma);

}  // namespace avq
