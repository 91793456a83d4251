#pragma once

#include "avq/exact/matrix.hpp"
#include "avq/torus/torsion_point.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace avq {

/// Invertible integer matrix of finite order acting on Z^d (and on R^d/Z^d).
///
/// Entries are stored as int16 to keep large stabilizers in memory; products
/// are accumulated in 64 bits and throw if an entry leaves that range.
/// The canonical encoding is the row-major entry tuple, which drives both
/// hashing and the total order used for deterministic output.
class LinearElement {
public:
  LinearElement() = default;
  /// Identity of size dim.
  explicit LinearElement(std::size_t dim);

  static LinearElement from_matrix(const MatZ &m);
  MatZ to_matrix() const;

  std::size_t dim() const { return dim_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
  const std::vector<std::int16_t> &entries() const { return a_; }
  std::size_t hash() const { return hash_; }

  bool is_identity() const;
  std::int64_t trace() const;
  /// rank over Q of (this - I).
  std::size_t fixed_codim() const;
  bool is_unimodular() const;

  /// Multiplicative order; throws when it exceeds `cap`.
  unsigned order(unsigned cap = 1024) const;
  LinearElement inverse() const;
  LinearElement power(long k) const;

  /// Action on a torsion point.
  TorsionPoint act(const TorsionPoint &p) const;
  /// y = this * x mod den for numerator vectors (hot path, no allocation).
  void act_mod(const std::int64_t *x, std::int64_t *y, std::int64_t den) const;
  /// True when this * x == x mod den.
  bool fixes_mod(const std::int64_t *x, std::int64_t den) const;

  friend LinearElement operator*(const LinearElement &a, const LinearElement &b);
  friend bool operator==(const LinearElement &a, const LinearElement &b) {
    return a.hash_ == b.hash_ && a.dim_ == b.dim_ && a.a_ == b.a_;
  }
  friend std::strong_ordering operator<=>(const LinearElement &a, const LinearElement &b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0)
      return c;
    return a.a_ <=> b.a_;
  }

private:
  void rehash();

  std::size_t dim_ = 0;
  std::vector<std::int16_t> a_;
  std::size_t hash_ = 0;
};

struct LinearElementHash {
  std::size_t operator()(const LinearElement &e) const { return e.hash(); }
};

/// rank over Q of an integer matrix given row-major; exact.
std::size_t integer_rank(std::vector<std::int64_t> a, std::size_t rows, std::size_t cols);

}  // namespace avq
