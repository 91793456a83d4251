#include "avq/torus/torus.hpp"

#include <algorithm>
#include <numeric>

namespace avq {

namespace {

MatQ identity_q(std::size_t n) { return to_rational(MatZ::identity(n)); }

// Integer matrix whose columns span the same Q-space as the rational columns.
MatZ clear_denominators(const MatQ &m) {
  MatZ out(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Int den = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Rat v = m(i, j) * Rat(den);
      out(i, j) = v.get_num();
    }
  }
  return out;
}

MatZ lattice_sum(const LatticeBasis &a, const LatticeBasis &b) { return a.basis().hconcat(b.basis()); }

LatticeBasis orbit_span(const LatticeBasis &start, const FiniteMatrixGroup &g) {
  LatticeBasis cur = saturate(start);
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto &s : g.generators()) {
      MatZ moved = s.to_matrix() * cur.basis();
      LatticeBasis next = saturate(LatticeBasis::from_generators(cur.basis().hconcat(moved)));
      if (next.rank() != cur.rank()) {
        cur = next;
        grew = true;
      }
    }
  }
  return cur;
}

}  // namespace

ComplexTorus::ComplexTorus(MatQ structure, Int c, int cm_tag) : k_(std::move(structure)), c_(std::move(c)), cm_(cm_tag) {
  if (k_.rows() != k_.cols() || k_.rows() % 2 != 0)
    throw ValidationError("complex structure must be square of even size");
  if (c_ <= 0 || !(k_ * k_ == Rat(-c_) * identity_q(k_.rows())))
    throw ValidationError("complex structure does not square to -c I");
}

MatZ zeta_block(int m) {
  switch (m) {
  case 1:
    return MatZ::identity(2);
  case 2:
    return -MatZ::identity(2);
  case 3: {
    MatZ z(2, 2);
    z(0, 1) = -1;
    z(1, 0) = 1;
    z(1, 1) = -1;
    return z;
  }
  case 4: {
    MatZ z(2, 2);
    z(0, 1) = -1;
    z(1, 0) = 1;
    return z;
  }
  case 6: {
    MatZ z(2, 2);
    z(0, 1) = -1;
    z(1, 0) = 1;
    z(1, 1) = 1;
    return z;
  }
  default:
    throw ValidationError("no CM curve for m = " + std::to_string(m));
  }
}

ComplexTorus ComplexTorus::cm_power(int m, std::size_t n) {
  MatZ block;
  Int c = 1;
  if (m == 1 || m == 2 || m == 4) {
    block = zeta_block(4);
  } else if (m == 3) {
    // sqrt(-3) = 2 zeta_3 + 1
    block = zeta_block(3) + zeta_block(3) + MatZ::identity(2);
    c = 3;
  } else if (m == 6) {
    // sqrt(-3) = 2 zeta_6 - 1
    block = zeta_block(6) + zeta_block(6) - MatZ::identity(2);
    c = 3;
  } else {
    throw ValidationError("no CM curve for m = " + std::to_string(m));
  }
  MatZ k(2 * n, 2 * n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        k(2 * b + i, 2 * b + j) = block(i, j);
  return ComplexTorus(to_rational(k), c, m);
}

bool ComplexTorus::commutes(const MatZ &m) const {
  MatQ q = to_rational(m);
  return q * k_ == k_ * q;
}

bool ComplexTorus::is_complex(const LatticeBasis &l) const {
  if (l.rank() % 2 != 0)
    return false;
  MatQ img = k_ * to_rational(l.basis());
  for (std::size_t j = 0; j < img.cols(); ++j) {
    auto c = img.col(j);
    if (!l.spans(c))
      return false;
  }
  return true;
}

Int FiniteSubgroup::order() const {
  Int o = 1;
  for (const auto &f : invariant_factors)
    o *= f;
  return o;
}

bool FiniteSubgroup::contains(const TorsionPoint &p) const {
  if (listed())
    return std::binary_search(elements.begin(), elements.end(), p);
  auto with = generators;
  with.push_back(p);
  return generated_by(p.dim(), std::move(with), 0).order() == order();
}

FiniteSubgroup FiniteSubgroup::generated_by(std::size_t dim, std::vector<TorsionPoint> points,
                                            std::size_t list_cap) {
  FiniteSubgroup fs;
  std::int64_t den = 1;
  for (const auto &p : points) {
    if (p.dim() != dim)
      throw Error("finite subgroup: point dimension mismatch");
    den = std::lcm(den, p.denominator());
  }
  for (auto &p : points)
    if (!p.is_zero())
      fs.generators.push_back(p);
  std::sort(fs.generators.begin(), fs.generators.end());
  fs.generators.erase(std::unique(fs.generators.begin(), fs.generators.end()), fs.generators.end());

  MatZ small = MatZ::identity(dim);
  for (std::size_t i = 0; i < dim; ++i)
    small(i, i) = Int(static_cast<long>(den));
  MatZ gens(dim, fs.generators.size());
  for (std::size_t j = 0; j < fs.generators.size(); ++j) {
    const auto &p = fs.generators[j];
    const std::int64_t scale = den / p.denominator();
    for (std::size_t i = 0; i < dim; ++i)
      gens(i, j) = Int(static_cast<long>(p.numerators()[i] * scale));
  }
  auto big = LatticeBasis::from_generators(small.hconcat(gens));
  auto qs = quotient_structure(big, LatticeBasis::from_generators(small), list_cap);
  fs.invariant_factors = qs.invariant_factors;
  if (qs.torsion_coordinates.size() == static_cast<std::size_t>(fs.order().get_ui())) {
    for (const auto &t : qs.torsion_coordinates)
      fs.elements.push_back(TorsionPoint::from_rationals(t));
    std::sort(fs.elements.begin(), fs.elements.end());
  }
  return fs;
}

Subtorus endo_image_subtorus(const ComplexTorus &x, const MatZ &f) {
  if (!x.commutes(f))
    throw ValidationError("endomorphism does not commute with the complex structure");
  return {saturate(LatticeBasis::from_generators(f))};
}

FiniteSubgroup subtorus_intersection_group(const Subtorus &a, const Subtorus &b) {
  const std::size_t d = a.lattice.ambient();
  MatZ joint = lattice_sum(a.lattice, b.lattice);
  if (rank(joint) != a.lattice.rank() + b.lattice.rank())
    throw ValidationError("subtorus_intersection_group: spans intersect");
  auto sum = LatticeBasis::from_generators(joint);
  auto qs = quotient_structure(saturate(sum), sum);
  // each coset rep v splits uniquely as v = p + q with p in V_a, q in V_b;
  // p is then a point of A that equals -q on B
  std::vector<TorsionPoint> points;
  MatQ jq = to_rational(joint);
  for (const auto &v : qs.representatives) {
    MatQ rhs(d, 1);
    for (std::size_t i = 0; i < d; ++i)
      rhs(i, 0) = Rat(v[i]);
    auto coeff = solve(jq, rhs);
    if (!coeff)
      throw Error("subtorus_intersection_group: representative outside the span");
    VecQ p(d, Rat(0));
    for (std::size_t j = 0; j < a.lattice.rank(); ++j)
      for (std::size_t i = 0; i < d; ++i)
        p[i] += Rat(a.lattice.basis()(i, j)) * (*coeff)(j, 0);
    points.push_back(TorsionPoint::from_rationals(p));
  }
  return FiniteSubgroup::generated_by(d, std::move(points));
}

MatQ invariant_form(const FiniteMatrixGroup &g) {
  const std::size_t d = g.dim();
  MatZ q(d, d);
  for (const auto &e : g.elements()) {
    MatZ m = e.to_matrix();
    q = q + m.transpose() * m;
  }
  return to_rational(q);
}

MatQ hermitian_invariant_form(const ComplexTorus &x, const FiniteMatrixGroup &g) {
  const std::size_t d = g.dim();
  const MatQ &k = x.structure();
  MatQ p = identity_q(d) + (Rat(1) / Rat(x.structure_square())) * (k.transpose() * k);
  MatQ q(d, d);
  for (const auto &e : g.elements()) {
    MatQ m = to_rational(e.to_matrix());
    q = q + m.transpose() * p * m;
  }
  return q;
}

Subtorus complementary_subtorus(const Subtorus &t, const MatQ &q) {
  const std::size_t d = t.lattice.ambient();
  if (t.lattice.rank() == 0)
    return {LatticeBasis::full(d)};
  MatQ rows = to_rational(t.lattice.basis()).transpose() * q;
  MatZ integral = clear_denominators(rows.transpose()).transpose();
  return {LatticeBasis::from_generators(integer_kernel(integral))};
}

FiniteSubgroup isogeny_kernel(const MatQ &lambda_a, const MatQ &lambda_b) {
  const std::size_t d = lambda_b.rows();
  if (lambda_a.rows() != d || rank(lambda_b) != d || lambda_b.cols() != d)
    throw ValidationError("isogeny_kernel: Lambda_B must be a full-rank basis");
  MatQ coords = inverse(lambda_b) * lambda_a;
  auto la = RationalLattice::from_generators(coords);
  if (!la.contains(RationalLattice::from_integer(LatticeBasis::full(d))))
    throw ValidationError("isogeny_kernel: Lambda_B is not contained in Lambda_A");
  std::vector<TorsionPoint> points;
  for (std::size_t j = 0; j < coords.cols(); ++j) {
    auto c = coords.col(j);
    points.push_back(TorsionPoint::from_rationals(c));
  }
  return FiniteSubgroup::generated_by(d, std::move(points));
}

Subtorus reflection_curve(const ComplexTorus &x, const LinearElement &sigma) {
  MatZ f = sigma.to_matrix();
  for (std::size_t i = 0; i < f.rows(); ++i)
    f(i, i) -= 1;
  return endo_image_subtorus(x, -f);
}

Subtorus reflection_complement(const ComplexTorus &x, const LinearElement &sigma) {
  const unsigned r = sigma.order();
  MatZ s = sigma.to_matrix();
  MatZ norm = MatZ::identity(s.rows()), p = MatZ::identity(s.rows());
  for (unsigned a = 1; a < r; ++a) {
    p = p * s;
    norm = norm + p;
  }
  return endo_image_subtorus(x, norm);
}

ReflectionDecomposition decompose_by_reflection_orbits(const ComplexTorus &x, const FiniteMatrixGroup &g) {
  const std::size_t d = g.dim();
  // a G-fixed vector lies in the kernel of every (s - I)
  MatZ stacked(0, d);
  for (const auto &s : g.generators()) {
    MatZ m = s.to_matrix();
    for (std::size_t i = 0; i < d; ++i)
      m(i, i) -= 1;
    stacked = stacked.vconcat(m);
  }
  if (g.generators().empty() || rank(stacked) < d)
    throw ValidationError("decompose_by_reflection_orbits: group fixes a nonzero vector");

  ReflectionDecomposition out;
  LatticeBasis covered(d);
  for (const auto &sigma : pseudoreflections(g.elements())) {
    Subtorus e = reflection_curve(x, sigma);
    if (covered.rank() > 0 && lattice_meet_join(covered, e.lattice).sum.rank() == covered.rank())
      continue;
    LatticeBasis span = orbit_span(e.lattice, g);
    out.factors.push_back({span});
    covered = saturate(LatticeBasis::from_generators(lattice_sum(covered, span)));
  }
  MatZ all(d, 0);
  for (const auto &f : out.factors)
    all = all.hconcat(f.lattice.basis());
  auto sum = LatticeBasis::from_generators(all);
  if (sum.rank() != d)
    throw ValidationError("decompose_by_reflection_orbits: reflections do not span (not a reflection group?)");
  out.kernel_order = lattice_index(LatticeBasis::full(d), sum);
  return out;
}

}  // namespace avq
