#include "avq/exact/normal_form.hpp"

#include <utility>

namespace avq {

namespace {

struct Bezout {
  Int g, s, t;
};

// s*a + t*b = g = gcd(a, b) >= 0
Bezout gcdext(const Int &a, const Int &b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Replaces columns (a, b) of m by (p*a + q*b, r*a + s*b).
void combine_cols(MatZ &m, std::size_t a, std::size_t b, const Int &p, const Int &q, const Int &r,
                  const Int &s) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int x = m(i, a), y = m(i, b);
    m(i, a) = p * x + q * y;
    m(i, b) = r * x + s * y;
  }
}

void combine_rows(MatZ &m, std::size_t a, std::size_t b, const Int &p, const Int &q, const Int &r,
                  const Int &s) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Int x = m(a, j), y = m(b, j);
    m(a, j) = p * x + q * y;
    m(b, j) = r * x + s * y;
  }
}

void add_col_multiple(MatZ &m, std::size_t dst, std::size_t src, const Int &k) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    m(i, dst) += k * m(i, src);
}

void negate_col(MatZ &m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    m(i, j) = -m(i, j);
}

void negate_row(MatZ &m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    m(i, j) = -m(i, j);
}

}  // namespace

HermiteResult hnf(const MatZ &m) {
  HermiteResult res;
  res.h = m;
  res.u = MatZ::identity(m.cols());
  MatZ &h = res.h;
  MatZ &u = res.u;
  std::size_t k = 0;
  for (std::size_t i = 0; i < h.rows() && k < h.cols(); ++i) {
    for (std::size_t j = k + 1; j < h.cols(); ++j) {
      if (h(i, j) == 0)
        continue;
      if (h(i, k) == 0) {
        h.swap_cols(k, j);
        u.swap_cols(k, j);
        continue;
      }
      const Int a = h(i, k), b = h(i, j);
      Bezout bz = gcdext(a, b);
      Int ag = a / bz.g, bg = b / bz.g;
      // (col_k, col_j) <- (s*col_k + t*col_j, -b/g*col_k + a/g*col_j)
      combine_cols(h, k, j, bz.s, bz.t, -bg, ag);
      combine_cols(u, k, j, bz.s, bz.t, -bg, ag);
    }
    if (h(i, k) == 0)
      continue;
    if (h(i, k) < 0) {
      negate_col(h, k);
      negate_col(u, k);
    }
    const Int p = h(i, k);
    for (std::size_t j = 0; j < k; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), p.get_mpz_t());
      if (q != 0) {
        add_col_multiple(h, j, k, Int(-q));
        add_col_multiple(u, j, k, Int(-q));
      }
    }
    res.pivot_rows.push_back(i);
    ++k;
  }
  res.rank = k;
  return res;
}

SmithResult snf(const MatZ &m) {
  SmithResult res;
  res.d = m;
  res.u = MatZ::identity(m.rows());
  res.v = MatZ::identity(m.cols());
  MatZ &d = res.d;
  MatZ &u = res.u;
  MatZ &v = res.v;
  const std::size_t r = m.rows(), c = m.cols();
  std::size_t t = 0;
  for (; t < std::min(r, c); ++t) {
    // Smallest nonzero entry of the trailing block as pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (d(i, j) != 0 && (!found || abs(d(i, j)) < best)) {
          found = true;
          best = abs(d(i, j));
          pi = i;
          pj = j;
        }
    if (!found)
      break;
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);

    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == 0)
          continue;
        const Int a = d(t, t), b = d(i, t);
        if (b % a == 0) {
          Int q = b / a;
          combine_rows(d, t, i, 1, 0, -q, 1);
          combine_rows(u, t, i, 1, 0, -q, 1);
        } else {
          Bezout bz = gcdext(a, b);
          Int ag = a / bz.g, bg = b / bz.g;
          combine_rows(d, t, i, bz.s, bz.t, -bg, ag);
          combine_rows(u, t, i, bz.s, bz.t, -bg, ag);
        }
        changed = true;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == 0)
          continue;
        const Int a = d(t, t), b = d(t, j);
        if (b % a == 0) {
          Int q = b / a;
          combine_cols(d, t, j, 1, 0, -q, 1);
          combine_cols(v, t, j, 1, 0, -q, 1);
        } else {
          Bezout bz = gcdext(a, b);
          Int ag = a / bz.g, bg = b / bz.g;
          combine_cols(d, t, j, bz.s, bz.t, -bg, ag);
          combine_cols(v, t, j, bz.s, bz.t, -bg, ag);
        }
        changed = true;
      }
      if (changed)
        continue;
      // Row and column clean; enforce divisibility of the trailing block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < r && !fixed; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (d(i, j) % d(t, t) != 0) {
            combine_rows(d, t, i, 1, 1, 0, 1);
            combine_rows(u, t, i, 1, 1, 0, 1);
            fixed = true;
            break;
          }
      if (!fixed)
        break;
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
    res.diagonal.push_back(d(t, t));
  }
  res.rank = t;
  return res;
}

namespace {

// Row echelon over Q in place; returns pivot columns.
std::vector<std::size_t> echelon(MatQ &a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0)
      ++sel;
    if (sel == a.rows())
      continue;
    a.swap_rows(row, sel);
    const Rat inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j)
      a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0)
        continue;
      const Rat f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const MatQ &m) {
  MatQ a = m;
  return echelon(a).size();
}

std::size_t rank(const MatZ &m) { return rank(to_rational(m)); }

Rat determinant(const MatQ &m) {
  if (m.rows() != m.cols())
    throw Error("determinant of non-square matrix");
  MatQ a = m;
  Rat det = 1;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a(sel, col) == 0)
      ++sel;
    if (sel == n)
      return 0;
    if (sel != col) {
      a.swap_rows(sel, col);
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0)
        continue;
      const Rat f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j)
        a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

Int determinant(const MatZ &m) {
  Rat d = determinant(to_rational(m));
  return d.get_num();
}

MatQ inverse(const MatQ &m) {
  if (m.rows() != m.cols())
    throw Error("inverse of non-square matrix");
  const std::size_t n = m.rows();
  MatQ aug = m.hconcat(MatQ::identity(n));
  auto piv = echelon(aug);
  if (piv.size() < n || piv.back() >= n)
    throw Error("inverse: singular matrix");
  return aug.cols_range(n, n);
}

MatZ inverse_unimodular(const MatZ &m) {
  MatQ inv = inverse(to_rational(m));
  if (!is_integral(inv))
    throw Error("inverse_unimodular: matrix is not unimodular");
  return to_integer(inv);
}

std::optional<MatQ> solve(const MatQ &a, const MatQ &b) {
  if (a.rows() != b.rows())
    throw Error("solve: dimension mismatch");
  MatQ aug = a.hconcat(b);
  auto piv = echelon(aug);
  MatQ x(a.cols(), b.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] >= a.cols())
      return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j)
      x(piv[r], j) = aug(r, a.cols() + j);
  }
  return x;
}

MatZ integer_kernel(const MatZ &m) {
  HermiteResult h = hnf(m);
  MatZ k = h.u.cols_range(h.rank, m.cols() - h.rank);
  if (k.cols() == 0)
    return k;
  HermiteResult hk = hnf(k);
  return hk.h.cols_range(0, hk.rank);
}

MatZ rational_kernel(const MatZ &m) { return integer_kernel(m); }

}  // namespace avq
