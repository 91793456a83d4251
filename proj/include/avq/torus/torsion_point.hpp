#pragma once

#include "avq/exact/matrix.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace avq {

/// Point of R^d / Z^d with rational coordinates, kept in canonical form:
/// a common denominator equal to the order of the point and numerators in
/// [0, denominator).
class TorsionPoint {
public:
  TorsionPoint() = default;
  /// The origin of R^dim / Z^dim.
  explicit TorsionPoint(std::size_t dim) : den_(1), num_(dim, 0) {}

  static TorsionPoint from_rationals(std::span<const Rat> coords);
  static TorsionPoint from_numerators(std::int64_t den, std::vector<std::int64_t> num);

  std::size_t dim() const { return num_.size(); }
  /// Order of the point; also its torsion level.
  std::int64_t denominator() const { return den_; }
  const std::vector<std::int64_t> &numerators() const { return num_; }
  VecQ coordinates() const;
  bool is_zero() const { return den_ == 1; }

  friend TorsionPoint operator+(const TorsionPoint &a, const TorsionPoint &b);
  friend TorsionPoint operator-(const TorsionPoint &a, const TorsionPoint &b);
  TorsionPoint operator-() const;
  TorsionPoint scaled(std::int64_t k) const;

  friend bool operator==(const TorsionPoint &, const TorsionPoint &) = default;
  /// Order by torsion level, then numerators lexicographically.
  friend std::strong_ordering operator<=>(const TorsionPoint &a, const TorsionPoint &b);

  /// e.g. "(1/2,0,0,1/4)"
  std::string str() const;

private:
  std::int64_t den_ = 1;
  std::vector<std::int64_t> num_;
};

/// Parses "(1/2, 0, -1/3)" or "1/2,0,-1/3".
TorsionPoint parse_point(std::string_view text);

}  // namespace avq
