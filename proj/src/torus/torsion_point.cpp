#include "avq/torus/torsion_point.hpp"

#include <numeric>
#include <sstream>

namespace avq {

TorsionPoint TorsionPoint::from_numerators(std::int64_t den, std::vector<std::int64_t> num) {
  if (den <= 0)
    throw Error("torsion point denominator must be positive");
  std::int64_t g = den;
  for (auto &x : num) {
    x = mod_floor(x, den);
    g = std::gcd(g, x);
  }
  TorsionPoint p;
  p.den_ = den / g;
  for (auto &x : num)
    x /= g;
  p.num_ = std::move(num);
  return p;
}

TorsionPoint TorsionPoint::from_rationals(std::span<const Rat> coords) {
  Int den = 1;
  for (const auto &c : coords)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  const std::int64_t d = to_i64(den);
  std::vector<std::int64_t> num;
  num.reserve(coords.size());
  for (const auto &c : coords) {
    Rat scaled = c * Rat(den);
    num.push_back(to_i64(mod_floor(scaled.get_num(), den)));
  }
  return from_numerators(d, std::move(num));
}

VecQ TorsionPoint::coordinates() const {
  VecQ v;
  v.reserve(num_.size());
  for (auto x : num_)
    v.push_back(make_rat(Int(static_cast<long>(x)), Int(static_cast<long>(den_))));
  return v;
}

TorsionPoint operator+(const TorsionPoint &a, const TorsionPoint &b) {
  if (a.dim() != b.dim())
    throw Error("torsion point dimension mismatch");
  const std::int64_t l = std::lcm(a.den_, b.den_);
  std::vector<std::int64_t> num(a.dim());
  for (std::size_t i = 0; i < num.size(); ++i)
    num[i] = a.num_[i] * (l / a.den_) + b.num_[i] * (l / b.den_);
  return TorsionPoint::from_numerators(l, std::move(num));
}

TorsionPoint TorsionPoint::operator-() const {
  std::vector<std::int64_t> num(num_.size());
  for (std::size_t i = 0; i < num.size(); ++i)
    num[i] = -num_[i];
  return from_numerators(den_, std::move(num));
}

TorsionPoint operator-(const TorsionPoint &a, const TorsionPoint &b) { return a + (-b); }

TorsionPoint TorsionPoint::scaled(std::int64_t k) const {
  std::vector<std::int64_t> num(num_.size());
  for (std::size_t i = 0; i < num.size(); ++i)
    num[i] = mod_floor(num_[i] * mod_floor(k, den_), den_);
  return from_numerators(den_, std::move(num));
}

std::strong_ordering operator<=>(const TorsionPoint &a, const TorsionPoint &b) {
  if (auto c = a.den_ <=> b.den_; c != 0)
    return c;
  return a.num_ <=> b.num_;
}

std::string TorsionPoint::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (i)
      os << ',';
    if (num_[i] == 0)
      os << 0;
    else {
      std::int64_t g = std::gcd(num_[i], den_);
      os << num_[i] / g;
      if (den_ / g != 1)
        os << '/' << den_ / g;
    }
  }
  os << ')';
  return os.str();
}

TorsionPoint parse_point(std::string_view text) {
  std::string s(text);
  VecQ coords;
  std::string cur;
  for (char ch : s) {
    if (ch == '(' || ch == ')' || ch == '[' || ch == ']' || ch == ' ')
      continue;
    if (ch == ',') {
      coords.push_back(parse_rat(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty())
    coords.push_back(parse_rat(cur));
  if (coords.empty())
    throw ValidationError("empty point literal");
  return TorsionPoint::from_rationals(coords);
}

}  // namespace avq
