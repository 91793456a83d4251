#include "avq/exact/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace avq {

LatticeBasis LatticeBasis::from_generators(const MatZ &generators) {
  LatticeBasis l;
  HermiteResult h = hnf(generators);
  l.basis_ = h.h.cols_range(0, h.rank);
  return l;
}

LatticeBasis LatticeBasis::full(std::size_t ambient) {
  LatticeBasis l;
  l.basis_ = MatZ::identity(ambient);
  return l;
}

VecQ LatticeBasis::coordinates(std::span<const Rat> v) const {
  if (v.size() != ambient())
    throw Error("coordinates: ambient dimension mismatch");
  auto x = solve(to_rational(basis_), MatQ::column(v));
  if (!x)
    throw Error("coordinates: vector outside the rational span");
  return x->col(0);
}

bool LatticeBasis::spans(std::span<const Rat> v) const {
  return solve(to_rational(basis_), MatQ::column(v)).has_value();
}

bool LatticeBasis::contains(std::span<const Int> v) const {
  VecQ q(v.begin(), v.end());
  auto x = solve(to_rational(basis_), MatQ::column(q));
  return x && is_integral(*x);
}

bool LatticeBasis::contains(const LatticeBasis &other) const {
  if (other.ambient() != ambient())
    return false;
  if (other.rank() == 0)
    return true;
  auto x = solve(to_rational(basis_), to_rational(other.basis_));
  return x && is_integral(*x);
}

std::string LatticeBasis::key() const {
  std::ostringstream os;
  os << ambient() << ':' << rank() << ':';
  for (const auto &v : basis_.data())
    os << v.get_str() << ',';
  return os.str();
}

LatticeBasis saturate(const LatticeBasis &lattice) {
  const std::size_t d = lattice.ambient();
  if (lattice.rank() == 0)
    return LatticeBasis(d);
  MatZ left = integer_kernel(lattice.basis().transpose());
  if (left.cols() == 0)
    return LatticeBasis::full(d);
  return LatticeBasis::from_generators(integer_kernel(left.transpose()));
}

bool is_saturated(const LatticeBasis &lattice) { return saturate(lattice) == lattice; }

MeetJoin lattice_meet_join(const LatticeBasis &a, const LatticeBasis &b) {
  if (a.ambient() != b.ambient())
    throw Error("lattice_meet_join: ambient rank mismatch");
  const std::size_t d = a.ambient();
  MeetJoin mj;
  mj.sum = LatticeBasis::from_generators(a.basis().hconcat(b.basis()));
  if (a.rank() == 0 || b.rank() == 0) {
    mj.intersection = LatticeBasis(d);
    return mj;
  }
  MatZ joined = a.basis().hconcat(-b.basis());
  MatZ k = integer_kernel(joined);
  if (k.cols() == 0) {
    mj.intersection = LatticeBasis(d);
    return mj;
  }
  MatZ top = k.rows_range(0, a.rank());
  mj.intersection = LatticeBasis::from_generators(a.basis() * top);
  return mj;
}

LatticeBasis span_intersection(const LatticeBasis &a, const LatticeBasis &b) {
  return lattice_meet_join(saturate(a), saturate(b)).intersection;
}

Int QuotientStructure::order() const {
  Int o = 1;
  for (const auto &f : invariant_factors)
    o *= f;
  return o;
}

QuotientStructure quotient_structure(const LatticeBasis &big, const LatticeBasis &small,
                                     std::size_t enumerate_cap) {
  if (big.ambient() != small.ambient() || big.rank() != small.rank())
    throw ValidationError("quotient_structure: lattices must have equal rank");
  const std::size_t k = big.rank();
  QuotientStructure qs;
  if (k == 0) {
    qs.representatives.push_back(VecZ(big.ambient(), 0));
    qs.torsion_coordinates.push_back({});
    return qs;
  }
  auto c_opt = solve(to_rational(big.basis()), to_rational(small.basis()));
  if (!c_opt || !is_integral(*c_opt))
    throw ValidationError("quotient_structure: sublattice not contained in lattice");
  MatZ c = to_integer(*c_opt);
  SmithResult s = snf(c);
  if (s.rank != k)
    throw ValidationError("quotient_structure: sublattice has lower rank");
  for (const auto &d : s.diagonal)
    if (d > 1)
      qs.invariant_factors.push_back(d);
  Int order = 1;
  for (const auto &d : s.diagonal)
    order *= d;
  if (order > Int(static_cast<unsigned long>(enumerate_cap)))
    return qs;

  MatZ uinv = inverse_unimodular(s.u);
  MatQ cinv = inverse(to_rational(c));
  std::vector<Int> z(k, 0);
  for (;;) {
    VecZ y = uinv.apply(z);
    qs.representatives.push_back(big.basis().apply(y));
    VecQ yq(y.begin(), y.end());
    VecQ t = cinv.apply(yq);
    for (auto &x : t)
      x = frac(x);
    qs.torsion_coordinates.push_back(std::move(t));
    // odometer, last index fastest
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      z[pos] += 1;
      if (z[pos] < s.diagonal[pos])
        break;
      z[pos] = 0;
      if (pos == 0) {
        pos = k + 1;
        break;
      }
    }
    if (pos == k + 1)
      break;
  }
  return qs;
}

Int lattice_index(const LatticeBasis &big, const LatticeBasis &small) {
  auto c = solve(to_rational(big.basis()), to_rational(small.basis()));
  if (!c || !is_integral(*c) || big.rank() != small.rank())
    throw ValidationError("lattice_index: not a finite-index sublattice");
  return abs(determinant(to_integer(*c)));
}

RationalLattice RationalLattice::from_generators(const MatQ &generators) {
  RationalLattice rl;
  Int den = 1;
  for (const auto &v : generators.data())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  rl.den_ = den;
  MatZ scaled(generators.rows(), generators.cols());
  for (std::size_t i = 0; i < generators.rows(); ++i)
    for (std::size_t j = 0; j < generators.cols(); ++j) {
      Rat x = generators(i, j) * Rat(den);
      scaled(i, j) = x.get_num();
    }
  rl.scaled_ = LatticeBasis::from_generators(scaled);
  return rl;
}

RationalLattice RationalLattice::from_integer(const LatticeBasis &lattice) {
  RationalLattice rl;
  rl.scaled_ = lattice;
  return rl;
}

MatQ RationalLattice::basis() const {
  MatQ b = to_rational(scaled_.basis());
  Rat inv = Rat(1) / Rat(den_);
  return inv * b;
}

bool RationalLattice::contains(std::span<const Rat> v) const {
  VecQ s(v.begin(), v.end());
  for (auto &x : s)
    x *= Rat(den_);
  for (const auto &x : s)
    if (!is_integer(x))
      return false;
  VecZ z;
  for (const auto &x : s)
    z.push_back(x.get_num());
  return scaled_.contains(z);
}

bool RationalLattice::contains(const RationalLattice &other) const {
  MatQ b = other.basis();
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto c = b.col(j);
    if (!contains(c))
      return false;
  }
  return true;
}


ModOneSolution solve_mod_one(const MatZ &m, std::span<const Rat> c, std::size_t enumerate_cap) {
  if (c.size() != m.rows())
    throw Error("solve_mod_one: dimension mismatch");
  const std::size_t k = m.cols();
  ModOneSolution out;
  SmithResult s = snf(m);
  // With y = V^-1 s the system decouples: d_i y_i == (U c)_i for i < r, and
  // the remaining rows need (U c)_i integral.
  VecQ uc(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rat acc = 0;
    for (std::size_t j = 0; j < m.rows(); ++j)
      acc += Rat(s.u(i, j)) * c[j];
    uc[i] = acc;
  }
  for (std::size_t i = s.rank; i < m.rows(); ++i)
    if (!is_integer(uc[i]))
      return out;
  out.solvable = true;
  out.direction = s.v.cols_range(s.rank, k - s.rank);
  out.component_count = 1;
  for (const auto &d : s.diagonal)
    out.component_count *= d;
  if (out.component_count > Int(static_cast<unsigned long>(enumerate_cap))) {
    out.complete = false;
    return out;
  }
  const std::size_t r = s.rank;
  std::vector<Int> j(r, 0);
  for (;;) {
    VecQ y(k, Rat(0));
    for (std::size_t i = 0; i < r; ++i)
      y[i] = (uc[i] + Rat(j[i])) / Rat(s.diagonal[i]);
    VecQ x(k, Rat(0));
    for (std::size_t a = 0; a < k; ++a) {
      Rat acc = 0;
      for (std::size_t b = 0; b < r; ++b)
        acc += Rat(s.v(a, b)) * y[b];
      x[a] = frac(acc);
    }
    out.points.push_back(std::move(x));
    std::size_t pos = r;
    bool done = true;
    while (pos > 0) {
      --pos;
      j[pos] += 1;
      if (j[pos] < s.diagonal[pos]) {
        done = false;
        break;
      }
      j[pos] = 0;
    }
    if (done)
      break;
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

}  // namespace avq
