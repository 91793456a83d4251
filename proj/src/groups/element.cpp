#include "avq/groups/element.hpp"

#include "avq/exact/normal_form.hpp"

#include <limits>

namespace avq {

namespace {

std::int16_t narrow(std::int64_t v) {
  if (v < std::numeric_limits<std::int16_t>::min() || v > std::numeric_limits<std::int16_t>::max())
    throw Error("group element entry out of range: " + std::to_string(v));
  return static_cast<std::int16_t>(v);
}

}  // namespace

LinearElement::LinearElement(std::size_t dim) : dim_(dim), a_(dim * dim, 0) {
  for (std::size_t i = 0; i < dim; ++i)
    a_[i * dim + i] = 1;
  rehash();
}

void LinearElement::rehash() {
  // FNV-1a over the entries.
  std::size_t h = 1469598103934665603ull;
  for (auto v : a_) {
    h ^= static_cast<std::uint16_t>(v);
    h *= 1099511628211ull;
  }
  hash_ = h;
}

LinearElement LinearElement::from_matrix(const MatZ &m) {
  if (m.rows() != m.cols())
    throw Error("group element must be square");
  LinearElement e;
  e.dim_ = m.rows();
  e.a_.reserve(m.rows() * m.cols());
  for (const auto &v : m.data())
    e.a_.push_back(narrow(to_i64(v)));
  e.rehash();
  return e;
}

MatZ LinearElement::to_matrix() const {
  MatZ m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      m(i, j) = Int(static_cast<long>((*this)(i, j)));
  return m;
}

bool LinearElement::is_identity() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (a_[i * dim_ + j] != (i == j ? 1 : 0))
        return false;
  return true;
}

std::int64_t LinearElement::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < dim_; ++i)
    t += a_[i * dim_ + i];
  return t;
}

std::size_t integer_rank(std::vector<std::int64_t> a, std::size_t rows, std::size_t cols) {
  // Fraction-free Bareiss elimination in 128-bit arithmetic; falls back to
  // exact rationals if an intermediate minor would overflow.
  std::vector<__int128> m(a.begin(), a.end());
  auto at = [&](std::size_t i, std::size_t j) -> __int128 & { return m[i * cols + j]; };
  __int128 prev = 1;
  std::size_t r = 0;
  const __int128 limit = static_cast<__int128>(1) << 62;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && at(sel, c) == 0)
      ++sel;
    if (sel == rows)
      continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(at(r, j), at(sel, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        __int128 v = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        v /= prev;
        if (v > limit || v < -limit) {
          MatZ z(rows, cols);
          for (std::size_t p = 0; p < rows; ++p)
            for (std::size_t q = 0; q < cols; ++q)
              z(p, q) = Int(static_cast<long>(a[p * cols + q]));
          return rank(z);
        }
        at(i, j) = v;
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

std::size_t LinearElement::fixed_codim() const {
  std::vector<std::int64_t> m(a_.begin(), a_.end());
  for (std::size_t i = 0; i < dim_; ++i)
    m[i * dim_ + i] -= 1;
  return integer_rank(std::move(m), dim_, dim_);
}

bool LinearElement::is_unimodular() const {
  Int d = determinant(to_matrix());
  return d == 1 || d == -1;
}

LinearElement operator*(const LinearElement &a, const LinearElement &b) {
  if (a.dim_ != b.dim_)
    throw Error("group element dimension mismatch");
  const std::size_t n = a.dim_;
  LinearElement c;
  c.dim_ = n;
  c.a_.assign(n * n, 0);
  std::int64_t acc[32];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      acc[j] = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t aik = a.a_[i * n + k];
      if (aik == 0)
        continue;
      const std::int16_t *brow = &b.a_[k * n];
      for (std::size_t j = 0; j < n; ++j)
        acc[j] += aik * brow[j];
    }
    for (std::size_t j = 0; j < n; ++j)
      c.a_[i * n + j] = narrow(acc[j]);
  }
  c.rehash();
  return c;
}

unsigned LinearElement::order(unsigned cap) const {
  LinearElement p = *this;
  for (unsigned k = 1; k <= cap; ++k) {
    if (p.is_identity())
      return k;
    p = p * (*this);
  }
  throw CapExceeded("element order exceeds cap " + std::to_string(cap));
}

LinearElement LinearElement::power(long k) const {
  if (k < 0)
    return inverse().power(-k);
  LinearElement result(dim_), base = *this;
  while (k > 0) {
    if (k & 1)
      result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

LinearElement LinearElement::inverse() const {
  unsigned k = order();
  return power(static_cast<long>(k) - 1);
}

void LinearElement::act_mod(const std::int64_t *x, std::int64_t *y, std::int64_t den) const {
  const std::size_t n = dim_;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t s = 0;
    const std::int16_t *row = &a_[i * n];
    for (std::size_t j = 0; j < n; ++j)
      s += row[j] * x[j];
    s %= den;
    y[i] = s < 0 ? s + den : s;
  }
}

bool LinearElement::fixes_mod(const std::int64_t *x, std::int64_t den) const {
  const std::size_t n = dim_;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t s = 0;
    const std::int16_t *row = &a_[i * n];
    for (std::size_t j = 0; j < n; ++j)
      s += row[j] * x[j];
    s -= x[i];
    if (s % den != 0)
      return false;
  }
  return true;
}

TorsionPoint LinearElement::act(const TorsionPoint &p) const {
  if (p.dim() != dim_)
    throw Error("point dimension does not match group element");
  std::vector<std::int64_t> y(dim_);
  act_mod(p.numerators().data(), y.data(), p.denominator());
  return TorsionPoint::from_numerators(p.denominator(), std::move(y));
}

}  // namespace avq
