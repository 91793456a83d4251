#pragma once

#include "avq/exact/matrix.hpp"

namespace avq {

/// Coefficients of the k-th cyclotomic polynomial, constant term first.
std::vector<Int> cyclotomic_polynomial(unsigned k);

/// Element of Q(zeta_k) in the power basis 1, zeta, ..., zeta^(phi(k)-1).
class Cyclotomic {
public:
  Cyclotomic() = default;
  Cyclotomic(unsigned conductor, VecQ coefficients);
  static Cyclotomic rational(unsigned conductor, const Rat &r);
  /// zeta_k^e for any integer exponent.
  static Cyclotomic zeta_power(unsigned conductor, long exponent);

  unsigned conductor() const { return k_; }
  std::size_t degree() const { return c_.size(); }
  const VecQ &coefficients() const { return c_; }
  bool is_zero() const;

  friend Cyclotomic operator+(const Cyclotomic &a, const Cyclotomic &b);
  friend Cyclotomic operator-(const Cyclotomic &a, const Cyclotomic &b);
  friend Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b);
  friend bool operator==(const Cyclotomic &a, const Cyclotomic &b) {
    return a.k_ == b.k_ && a.c_ == b.c_;
  }

  /// Matrix of multiplication by this element on the power basis.
  MatQ multiplication_matrix() const;

private:
  unsigned k_ = 1;
  VecQ c_{Rat(0)};
};

/// Column vector over Q(zeta_k).
using CycVector = std::vector<Cyclotomic>;
/// Square matrix over Q(zeta_k), row-major rows.
using CycMatrix = std::vector<CycVector>;

CycVector apply(const CycMatrix &m, const CycVector &v);
/// Coordinates of v in Q^(n * phi(k)), complex coordinate major.
VecQ realify(const CycVector &v);

}  // namespace avq
