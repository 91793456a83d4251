#include "avq/catalog/lattices.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_set>

namespace avq {

LatticeBasis root_line(const LinearElement &g) {
  MatZ m = g.to_matrix();
  for (std::size_t i = 0; i < m.rows(); ++i)
    m(i, i) -= 1;
  return saturate(LatticeBasis::from_generators(m));
}

RootLatticeResult root_lattice(const Scenario &s, std::size_t enumeration_cap) {
  const std::size_t d = s.dim();
  RootLatticeResult r;
  std::map<std::string, LatticeBasis> lines;
  auto order_known = s.group.declared_order();
  bool enumerate = s.group.is_closed() || (order_known && *order_known <= enumeration_cap);
  if (enumerate) {
    for (const auto &g : s.group.elements())
      if (g.fixed_codim() == 2) {
        auto l = root_line(g);
        lines.emplace(l.key(), l);
      }
    r.from_enumeration = true;
  } else {
    std::vector<LatticeBasis> queue;
    for (const auto &g : s.group.generators())
      if (g.fixed_codim() == 2) {
        auto l = root_line(g);
        if (lines.emplace(l.key(), l).second)
          queue.push_back(l);
      }
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto &g : s.group.generators()) {
        auto l = LatticeBasis::from_generators(g.to_matrix() * queue[i].basis());
        if (lines.emplace(l.key(), l).second)
          queue.push_back(l);
      }
  }
  r.root_lines = lines.size();
  MatZ all(d, 0);
  for (const auto &[k, l] : lines)
    all = all.hconcat(l.basis());
  r.lattice = LatticeBasis::from_generators(all);
  if (!r.lattice.is_full())
    throw ValidationError(s.label + ": root lattice has rank " + std::to_string(r.lattice.rank()) + " < " +
                          std::to_string(d));
  r.index = lattice_index(LatticeBasis::full(d), r.lattice);
  r.scenario = rebase(s, to_rational(r.lattice.basis()), s.label + "/root");
  return r;
}

MatQ lattice_with(std::size_t dim, const std::vector<VecQ> &extra) {
  MatQ gens = to_rational(MatZ::identity(dim));
  MatQ cols(dim, extra.size());
  for (std::size_t j = 0; j < extra.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i)
      cols(i, j) = extra[j][i];
  return RationalLattice::from_generators(gens.hconcat(cols)).basis();
}

MatQ slot_basis(const MatQ &basis, std::size_t slot, const VecQ &v) {
  MatQ b = basis;
  for (std::size_t i = 0; i < b.rows(); ++i)
    b(i, slot) = v[i];
  return b;
}

namespace {

using Subgroup = std::vector<TorsionPoint>;

Subgroup generated(const Subgroup &base, const TorsionPoint &x) {
  std::set<TorsionPoint> s(base.begin(), base.end());
  std::vector<TorsionPoint> queue(base.begin(), base.end());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    TorsionPoint y = queue[i] + x;
    if (s.insert(y).second)
      queue.push_back(y);
  }
  return {s.begin(), s.end()};
}

}  // namespace

SMatrixResult s_matrix_and_intermediate_lattices(const Scenario &s, bool check_generation, std::size_t closure_cap,
                                                 std::size_t quotient_cap) {
  const std::size_t d = s.dim();
  const std::size_t n = d / 2;
  if (s.designated_reflections.size() != n)
    throw ValidationError(s.label + ": S matrix needs exactly " + std::to_string(n) + " designated reflections, got " +
                          std::to_string(s.designated_reflections.size()));
  std::vector<LinearElement> refl;
  for (auto i : s.designated_reflections) {
    const auto &g = s.group.generators().at(i);
    if (g.fixed_codim() != 2)
      throw ValidationError(s.label + ": designated generator " + std::to_string(i) + " is not a pseudoreflection");
    refl.push_back(g);
  }
  if (check_generation) {
    auto order = s.group.declared_order();
    if (!order || *order <= closure_cap) {
      SubgroupBuilder b(d, closure_cap);
      for (const auto &g : refl)
        b.add_generator(g);
      if (b.size() != s.group.order(closure_cap))
        throw ValidationError(s.label + ": designated reflections do not generate the group");
    }
  }

  SMatrixResult r;
  r.s = MatZ(d, d);
  for (std::size_t i = 0; i < d; ++i)
    r.s(i, i) = static_cast<long>(n);
  for (const auto &g : refl)
    r.s = r.s - g.to_matrix();
  r.det_real = determinant(r.s);
  if (r.det_real == 0)
    throw ValidationError(s.label + ": S is singular");
  r.s_inverse = RationalLattice::from_generators(inverse(to_rational(r.s))).basis();

  // Work in Z^d scaled by the common denominator.
  auto big_q = RationalLattice::from_generators(r.s_inverse.hconcat(to_rational(MatZ::identity(d))));
  const Int den = big_q.denominator();
  MatZ small = MatZ::identity(d);
  for (std::size_t i = 0; i < d; ++i)
    small(i, i) = den;
  auto qs = quotient_structure(big_q.scaled(), LatticeBasis::from_generators(small), quotient_cap);
  r.quotient_factors = qs.invariant_factors;
  if (qs.order() > Int(static_cast<unsigned long>(quotient_cap)))
    throw ValidationError(s.label + ": S^-1 Lambda^0 / Lambda^0 too large to enumerate");

  std::vector<TorsionPoint> elements;
  for (const auto &c : qs.torsion_coordinates)
    elements.push_back(TorsionPoint::from_rationals(c));
  std::sort(elements.begin(), elements.end());
  for (const auto &g : s.group.generators())
    for (const auto &x : elements)
      if (!(g.act(x) == x))
        r.action_trivial = false;

  // Subgroups by repeated extension.
  std::set<Subgroup> found;
  std::vector<Subgroup> queue{{TorsionPoint(d)}};
  found.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto &x : elements) {
      if (std::binary_search(queue[i].begin(), queue[i].end(), x))
        continue;
      Subgroup h = generated(queue[i], x);
      if (found.insert(h).second)
        queue.push_back(h);
    }
  std::vector<Subgroup> stable;
  for (const auto &h : found) {
    bool ok = true;
    for (const auto &g : s.group.generators()) {
      for (const auto &x : h)
        if (!std::binary_search(h.begin(), h.end(), g.act(x))) {
          ok = false;
          break;
        }
      if (!ok)
        break;
    }
    if (ok)
      stable.push_back(h);
  }
  std::sort(stable.begin(), stable.end(), [](const Subgroup &a, const Subgroup &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::map<std::size_t, int> per_index;
  for (const auto &h : stable) {
    std::vector<VecQ> extra;
    for (const auto &x : h)
      extra.push_back(x.coordinates());
    IntermediateLattice il;
    il.basis = lattice_with(d, extra);
    il.index = Int(static_cast<unsigned long>(h.size()));
    int k = per_index[h.size()]++;
    il.label = "L" + std::to_string(h.size()) + "." + std::to_string(k);
    r.lattices.push_back(std::move(il));
  }
  r.lattices.front().label = "root";
  r.lattices.back().label = "S^-1root";
  if (r.lattices.size() == 1)
    r.lattices.front().label = "root";
  return r;
}

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return std::string(s);
}

VecQ parse_combination(const Scenario &s, const std::string &expr) {
  VecQ out(s.dim(), Rat(0));
  std::size_t i = 0;
  while (i < expr.size()) {
    long sign = 1;
    if (expr[i] == '+' || expr[i] == '-') {
      sign = expr[i] == '-' ? -1 : 1;
      ++i;
    }
    long coef = 0;
    bool digits = false;
    while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) {
      coef = coef * 10 + (expr[i] - '0');
      digits = true;
      ++i;
    }
    if (!digits)
      coef = 1;
    std::size_t j = i;
    while (j < expr.size() && expr[j] != '+' && expr[j] != '-')
      ++j;
    std::string name = expr.substr(i, j - i);
    auto it = s.named_vectors.find(name);
    if (it == s.named_vectors.end())
      throw ValidationError(s.label + ": unknown lattice vector '" + name + "'");
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] += Rat(sign * coef) * it->second[k];
    i = j;
  }
  return out;
}

}  // namespace

MatQ lattice_from_spec(const Scenario &s, const std::string &spec) {
  const std::size_t d = s.dim();
  MatQ basis = to_rational(MatZ::identity(d));
  std::string sp = trim(spec);
  if (sp.empty() || sp == "root" || sp == "e")
    return basis;
  std::vector<VecQ> vectors;
  std::size_t start = 0;
  while (start <= sp.size()) {
    std::size_t comma = sp.find(',', start);
    std::string term = trim(sp.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    auto at = term.find('@');
    if (at == std::string::npos)
      throw ValidationError("lattice spec term '" + term + "' needs @slot");
    VecQ v = parse_combination(s, trim(term.substr(0, at)));
    std::size_t slot = std::stoul(term.substr(at + 1));
    if (slot == 0 || slot > d)
      throw ValidationError("lattice spec slot out of range in '" + term + "'");
    basis = slot_basis(basis, slot - 1, v);
    vectors.push_back(std::move(v));
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }
  if (RationalLattice::from_generators(basis) != RationalLattice::from_generators(lattice_with(d, vectors)))
    throw ValidationError("lattice spec '" + spec + "' is not a basis of the lattice it names");
  return basis;
}

}  // namespace avq
