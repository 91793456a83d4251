#include "avq/exact/cyclotomic.hpp"

#include <map>

namespace avq {

namespace {

using Poly = std::vector<Int>;

Poly poly_mul(const Poly &a, const Poly &b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  return r;
}

// Exact division by a monic polynomial.
Poly poly_div_exact(Poly a, const Poly &b) {
  const std::size_t db = b.size() - 1;
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    Int c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j)
      a[i - db + j] -= c * b[j];
  }
  return q;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(unsigned k) {
  if (k == 0)
    throw Error("cyclotomic_polynomial: conductor must be positive");
  static std::map<unsigned, Poly> cache;
  if (auto it = cache.find(k); it != cache.end())
    return it->second;
  // x^k - 1 divided by Phi_d for every proper divisor d.
  Poly p(k + 1, 0);
  p[0] = -1;
  p[k] = 1;
  for (unsigned d = 1; d < k; ++d)
    if (k % d == 0)
      p = poly_div_exact(p, cyclotomic_polynomial(d));
  cache[k] = p;
  return p;
}

Cyclotomic::Cyclotomic(unsigned conductor, VecQ coefficients) : k_(conductor) {
  Poly phi = cyclotomic_polynomial(conductor);
  const std::size_t deg = phi.size() - 1;
  // Reduce modulo Phi_k (monic).
  while (coefficients.size() > deg) {
    Rat top = coefficients.back();
    const std::size_t shift = coefficients.size() - 1 - deg;
    coefficients.pop_back();
    for (std::size_t j = 0; j < deg; ++j)
      coefficients[shift + j] -= top * Rat(phi[j]);
  }
  coefficients.resize(deg, Rat(0));
  c_ = std::move(coefficients);
}

Cyclotomic Cyclotomic::rational(unsigned conductor, const Rat &r) {
  return Cyclotomic(conductor, VecQ{r});
}

Cyclotomic Cyclotomic::zeta_power(unsigned conductor, long exponent) {
  long e = exponent % static_cast<long>(conductor);
  if (e < 0)
    e += conductor;
  VecQ c(static_cast<std::size_t>(e) + 1, Rat(0));
  c[e] = 1;
  return Cyclotomic(conductor, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto &x : c_)
    if (x != 0)
      return false;
  return true;
}

Cyclotomic operator+(const Cyclotomic &a, const Cyclotomic &b) {
  if (a.k_ != b.k_)
    throw Error("cyclotomic conductor mismatch");
  VecQ c = a.c_;
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] += b.c_[i];
  return Cyclotomic(a.k_, std::move(c));
}

Cyclotomic operator-(const Cyclotomic &a, const Cyclotomic &b) {
  if (a.k_ != b.k_)
    throw Error("cyclotomic conductor mismatch");
  VecQ c = a.c_;
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] -= b.c_[i];
  return Cyclotomic(a.k_, std::move(c));
}

Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b) {
  if (a.k_ != b.k_)
    throw Error("cyclotomic conductor mismatch");
  VecQ c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] += a.c_[i] * b.c_[j];
  }
  return Cyclotomic(a.k_, std::move(c));
}

MatQ Cyclotomic::multiplication_matrix() const {
  const std::size_t d = degree();
  MatQ m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Cyclotomic col = (*this) * zeta_power(k_, static_cast<long>(j));
    for (std::size_t i = 0; i < d; ++i)
      m(i, j) = col.coefficients()[i];
  }
  return m;
}

CycVector apply(const CycMatrix &m, const CycVector &v) {
  CycVector r;
  r.reserve(m.size());
  for (const auto &row : m) {
    if (row.size() != v.size())
      throw Error("cyclotomic matrix-vector product: dimension mismatch");
    Cyclotomic acc = Cyclotomic::rational(v.empty() ? 1 : v[0].conductor(), 0);
    for (std::size_t j = 0; j < v.size(); ++j)
      acc = acc + row[j] * v[j];
    r.push_back(acc);
  }
  return r;
}

VecQ realify(const CycVector &v) {
  VecQ r;
  for (const auto &x : v)
    r.insert(r.end(), x.coefficients().begin(), x.coefficients().end());
  return r;
}

}  // namespace avq
