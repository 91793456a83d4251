#include "avq/catalog/scenario.hpp"

namespace avq {

void Scenario::validate() const {
  if (torus.real_rank() != group.dim())
    throw ValidationError(label + ": torus and group dimensions differ");
  for (const auto &g : group.generators()) {
    MatZ m = g.to_matrix();
    if (!g.is_unimodular())
      throw ValidationError(label + ": generator does not preserve the lattice");
    if (!torus.commutes(m))
      throw ValidationError(label + ": generator does not commute with the complex structure");
    (void)g.order();
  }
  if (delta) {
    for (const auto &g : group.generators())
      for (const auto &t : delta->generators)
        if (!delta->contains(g.act(t)))
          throw ValidationError(label + ": Delta is not G-stable");
  }
}

TorsionPoint QuotientChart::map_point(const TorsionPoint &x) const {
  VecQ c = x.coordinates();
  return TorsionPoint::from_rationals(to_quotient.apply(c));
}

LatticeBasis QuotientChart::map_subtorus(const LatticeBasis &t) const {
  MatQ img = to_quotient * to_rational(t.basis());
  MatZ cols(img.rows(), img.cols());
  for (std::size_t j = 0; j < img.cols(); ++j) {
    Int den = 1;
    for (std::size_t i = 0; i < img.rows(); ++i)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), img(i, j).get_den_mpz_t());
    for (std::size_t i = 0; i < img.rows(); ++i) {
      Rat v = img(i, j) * Rat(den);
      cols(i, j) = v.get_num();
    }
  }
  return saturate(LatticeBasis::from_generators(cols));
}

Scenario rebase(const Scenario &s, const MatQ &lattice, std::string label) {
  const std::size_t d = s.dim();
  MatQ p = lattice;
  MatQ pinv = inverse(p);
  std::vector<LinearElement> gens;
  for (const auto &g : s.group.generators()) {
    MatQ c = pinv * to_rational(g.to_matrix()) * p;
    if (!is_integral(c))
      throw ValidationError(label + ": lattice is not stable under the group");
    gens.push_back(LinearElement::from_matrix(to_integer(c)));
  }
  Scenario out = s;
  out.label = std::move(label);
  out.torus = ComplexTorus(pinv * s.torus.structure() * p, s.torus.structure_square(), 0);
  out.group = FiniteMatrixGroup(d, std::move(gens), s.group.name());
  if (s.group.declared_order())
    out.group.set_declared_order(*s.group.declared_order());
  out.delta.reset();
  out.named_vectors.clear();
  for (const auto &[k, v] : s.named_vectors)
    out.named_vectors[k] = pinv.apply(v);
  out.basis_note = s.basis_note + "; rebased";
  return out;
}

QuotientChart quotient_chart(const Scenario &s) {
  const std::size_t d = s.dim();
  QuotientChart qc;
  if (!s.is_affine()) {
    qc.scenario = s;
    qc.lattice = to_rational(MatZ::identity(d));
    qc.to_quotient = qc.lattice;
    return qc;
  }
  MatQ gens = to_rational(MatZ::identity(d));
  MatQ lifts(d, s.delta->generators.size());
  for (std::size_t j = 0; j < s.delta->generators.size(); ++j) {
    VecQ c = s.delta->generators[j].coordinates();
    for (std::size_t i = 0; i < d; ++i)
      lifts(i, j) = c[i];
  }
  auto lam = RationalLattice::from_generators(gens.hconcat(lifts));
  qc.lattice = lam.basis();
  qc.to_quotient = inverse(qc.lattice);
  qc.scenario = rebase(s, qc.lattice, s.label + "/Delta");
  return qc;
}

}  // namespace avq
