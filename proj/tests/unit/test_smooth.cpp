#include "avq/groups/kernels.hpp"
#include "avq/smooth/tables.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace avq;
using namespace avq::test;

namespace {

Scenario curve_with(int m, const LinearElement &g) {
  Scenario s;
  s.label = "curve";
  s.torus = ComplexTorus::cm_power(m, 1);
  s.group = FiniteMatrixGroup(2, {g});
  return s;
}

bool contains(const std::vector<AffineElement> &els, const AffineElement &a) {
  return std::find(els.begin(), els.end(), a) != els.end();
}

// The point witness is the lowest point in canonical coordinates, so it moves
// with the basis; the strata do not.
std::multiset<std::pair<std::uint64_t, std::uint64_t>> witness_orders(const AuditVerdict &v) {
  std::multiset<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto &st : v.nonsmooth_strata)
    out.insert({st.h_order(), st.p0_order});
  return out;
}

// Independent recheck of a NotSmooth verdict on the chart it ran on.
void recheck(const Scenario &s, const AuditVerdict &v, std::mt19937_64 &rng) {
  const Scenario &a = quotient_chart(s).scenario;
  const auto &els = a.group.elements();
  for (const auto &st : v.nonsmooth_strata) {
    CHECK(st.h_order() > st.p0_order);
    MatQ t = to_rational(st.direction.basis());
    for (int k = 0; k < 10; ++k) {
      VecQ x = st.base.coordinates();
      for (std::size_t j = 0; j < t.cols(); ++j) {
        Rat c = make_rat(Int(static_cast<long>(rng() % 97)), Int(97));
        for (std::size_t i = 0; i < x.size(); ++i)
          x[i] += c * t(i, j);
      }
      for (const auto &g : st.generic_stabilizer)
        CHECK(fixes(g.linear, x));
    }
  }
  if (v.point_witness) {
    auto stab = oracle_stabilizer(els, v.point_witness->point);
    CHECK(stab.size() == v.point_witness->s0_order);
    auto p = reflection_subgroup(stab, a.dim());
    CHECK(p.order() == v.point_witness->p0_order);
    CHECK(p.order() < stab.size());
  }
}

}  // namespace

TEST_CASE("point stabilizer reports") {
  auto s = build_gmpn(4, 1, 3);
  auto origin = point_stabilizer_report(s, TorsionPoint(6));
  CHECK(origin.s0_order == 384);
  CHECK(origin.smooth());
  auto r = point_stabilizer_report(s, point({Rat(1, 2), Rat(1, 2), 0, 0, Rat(1, 3), 0}));
  CHECK(r.s0_order % r.p0_order == 0);
  CHECK(r.s0_order == oracle_stabilizer(s.group.elements(), r.point).size());
}

TEST_CASE("fixed locus components") {
  auto minus = LinearElement::from_matrix(mz({{-1, 0}, {0, -1}}));
  auto c1 = fixed_locus_components(curve_with(2, minus), minus);
  CHECK(c1.size() == 4);
  for (const auto &st : c1) {
    CHECK(st.direction.rank() == 0);
    CHECK(st.base.denominator() <= 2);
  }
  auto s = build_gmpn(2, 1, 3);
  auto sigma = permutation_element({1, 0, 2});
  auto c2 = fixed_locus_components(s, sigma);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].direction == reflection_complement(s.torus, sigma).lattice);
  auto c3 = fixed_locus_components(s, diagonal_element(2, {1, 1, 0}));
  CHECK(c3.size() == 16);
  CHECK(c3[0].direction.rank() == 2);
}

TEST_CASE("generic stabilizers of strata") {
  std::mt19937_64 rng(4);
  auto s = build_gmpn(3, 1, 3);
  // T = 0 gives the point stabilizer
  auto x = point({Rat(1, 3), Rat(2, 3), 0, 0, 0, 0});
  auto st = stratum_generic_stabilizer(s, x, LatticeBasis(6));
  CHECK(st.size() == point_stabilizer_report(s, x).s0_order);
  // the full torus direction leaves only the identity
  CHECK(stratum_generic_stabilizer(s, TorsionPoint(6), LatticeBasis::full(6)).size() == 1);

  auto w = witness_points(2, 2, 3, "prop33");
  auto h = stratum_generic_stabilizer(w.scenario, w.base, w.direction);
  CHECK(h.size() == 2);
  CHECK(!is_pseudoreflection(w.expected.front().linear).is_reflection);
  auto stratum = make_stratum(w.scenario, w.base, w.direction);
  CHECK(stratum.p0_order == 1);
  CHECK(sampled_generic_stabilizer(w.scenario, stratum, rng).size() == 2);
}

TEST_CASE("witness generators") {
  auto w63 = witness_points(6, 3, 3, "prop33");
  std::vector<std::string> names;
  for (const auto &e : w63.expected)
    names.push_back(affine_monomial_str(e, 6));
  CHECK(names == std::vector<std::string>{"(z^2,z^4,1)", "(1,z^3,1)"});

  for (int p : {1, 3}) {
    auto w = witness_points(3, p, 3, "prop36");
    auto rep = point_stabilizer_report(w.scenario, w.base);
    CHECK(contains(rep.elements, w.expected.front()));
    CHECK(!is_affine_pseudoreflection(w.expected.front()));
    CHECK(rep.p0_order < rep.s0_order);
    CHECK(affine_monomial_str(w.expected.front(), 3) == "((0,0,1/3,2/3,2/3,1/3);(z,z,z))");
  }
  // (2,1,3) quarter periods: ((a,b,c),(-1,-1,-1))
  auto w = witness_points(2, 1, 3, "prop36");
  auto rep = point_stabilizer_report(w.scenario, w.base);
  CHECK(contains(rep.elements, w.expected.front()));
  CHECK(rep.s0_order == 2);
  CHECK(rep.p0_order == 1);
  CHECK_THROWS_AS(witness_points(2, 2, 3, "prop36"), ValidationError);
  // the generator that exists only for p = 1
  CHECK(witness_points(2, 1, 4, "prop36").expected.size() == 2);
  CHECK(witness_points(2, 2, 4, "prop36").expected.size() == 1);
}

TEST_CASE("remark candidates") {
  auto minus = LinearElement::from_matrix(mz({{-1, 0}, {0, -1}}));
  auto c = curve_with(2, minus);
  auto pts = remark_candidates(c, minus, invariant_form(c.group));
  std::sort(pts.begin(), pts.end());
  CHECK(pts == std::vector<TorsionPoint>{point({0, Rat(1, 2)}), point({Rat(1, 2), 0})});

  auto z6 = diagonal_element(6, {1});
  auto e6 = curve_with(6, z6);
  CHECK(remark_candidates(e6, z6, hermitian_invariant_form(e6.torus, e6.group)).empty());
  CHECK(remark_candidates(e6, LinearElement(2), hermitian_invariant_form(e6.torus, e6.group)).empty());

  for (const char *label : {"gmpn-3-3-3", "gmpn-4-2-3", "example-b-3"}) {
    auto s = builtin_scenario(label);
    MatQ q = hermitian_invariant_form(s.torus, s.group);
    for (const auto &g : s.group.elements())
      for (const auto &x : remark_candidates(s, g, q))
        CHECK(fixes(g, x.coordinates()));
  }
}

// v0 of each #4 row of the second table is a fixed point off the identity
// component for some group element, up to the G-action.
TEST_CASE("remark candidates reach the ST4 table points") {
  auto dir = data_dir();
  auto rows = read_tsv(dir / "golden" / "paper2.tsv");
  std::size_t checked = 0;
  for (const auto &row : rows) {
    if (row[0] != "4")
      continue;
    auto s = load_sporadic(dir / "sporadic" / (row[2] + ".json"));
    if (row[3] != "root")
      s = rebase(s, lattice_from_spec(s, row[3]), row[1]);
    MatQ q = hermitian_invariant_form(s.torus, s.group);
    auto orbit = orbit_stabilizer(s.group, parse_point(row[4])).orbit;
    std::set<TorsionPoint> targets(orbit.begin(), orbit.end());
    bool hit = false;
    for (const auto &g : s.group.elements())
      for (const auto &x : remark_candidates(s, g, q))
        hit = hit || targets.count(x);
    CAPTURE(row[1]);
    CHECK(hit);
    ++checked;
  }
  CHECK(checked == 5);
}

TEST_CASE("translation witnesses") {
  auto s = build_sn_diagonal_delta(3);
  auto zero = solve_translation_witness(s, TorsionPoint(6));
  CHECK(zero.tau.act(zero.z) == zero.z);

  TorsionPoint t = s.delta->generators.front();
  CHECK(t.denominator() == 4);
  auto w = solve_translation_witness(s, t);
  CHECK(w.z - w.tau.act(w.z) == t);
  auto rep = point_stabilizer_report(s, w.z);
  CHECK(contains(rep.elements, AffineElement{w.tau, t}));
  CHECK(rep.s0_order > rep.p0_order);

  auto d = build_diagonal_delta(2, 1, 3);
  TorsionPoint u = d.delta->generators.front();
  auto wd = solve_translation_witness(d, u);
  auto rd = point_stabilizer_report(d, wd.z);
  CHECK(contains(rd.elements, AffineElement{wd.tau, u}));
  CHECK(rd.s0_order > rd.p0_order);
}

TEST_CASE("audit verdicts") {
  std::mt19937_64 rng(8);
  for (const char *label : {"example-a-2-3", "example-b-2", "hyperplanar-2-2-3"}) {
    auto s = builtin_scenario(label);
    auto v = smoothness_audit(s, AuditOptions::defaults_for(s));
    CAPTURE(label);
    CHECK(v.smooth);
    CHECK(v.complete);
  }
  for (const char *label : {"gmpn-3-3-3", "incomplete-1-3", "sn-diagonal-3", "diagonal-2-1-3", "hyperplanar-3-3-3"}) {
    auto s = builtin_scenario(label);
    auto v = smoothness_audit(s, AuditOptions::defaults_for(s));
    CAPTURE(label);
    CHECK(!v.smooth);
    REQUIRE((v.witness || v.point_witness));
    recheck(s, v, rng);
  }
  auto g333 = build_gmpn(3, 3, 3);
  auto v = smoothness_audit(g333, AuditOptions::defaults_for(g333));
  REQUIRE(v.witness);
  CHECK(v.witness->h_order() == 3);
  CHECK(v.witness->p0_order == 1);
  for (const auto &g : v.witness->generic_stabilizer)
    if (!g.linear.is_identity())
      CHECK(g.linear.fixed_codim() == 4);
}

TEST_CASE("audit is invariant under a change of lattice basis") {
  auto s = build_gmpn(3, 3, 3);
  MatQ u = MatQ::identity(6);
  u(0, 2) = 1;
  u(1, 4) = -1;
  u(3, 5) = 2;
  auto t = rebase(s, u, "gmpn-3-3-3-rebased");
  auto a = smoothness_audit(s, AuditOptions::defaults_for(s));
  auto b = smoothness_audit(t, AuditOptions::defaults_for(s));
  CHECK(a.smooth == b.smooth);
  CHECK(a.torsion_nonsmooth == b.torsion_nonsmooth);
  CHECK(witness_orders(a) == witness_orders(b));
}

TEST_CASE("audit does not depend on the parallel switch") {
  auto s = build_gmpn(4, 2, 3);
  auto opt = AuditOptions::defaults_for(s);
  kernels::set_parallel(false);
  auto a = smoothness_audit(s, opt);
  kernels::set_parallel(true);
  auto b = smoothness_audit(s, opt);
  CHECK(a.smooth == b.smooth);
  CHECK(a.strata_orbits == b.strata_orbits);
  CHECK(a.torsion_orbits == b.torsion_orbits);
  REQUIRE(a.nonsmooth_strata.size() == b.nonsmooth_strata.size());
  for (std::size_t i = 0; i < a.nonsmooth_strata.size(); ++i)
    CHECK(a.nonsmooth_strata[i].key == b.nonsmooth_strata[i].key);
}

TEST_CASE("monomial formatting") {
  CHECK(monomial_str(diagonal_element(3, {1, 2, 0}), 3) == "(z,z^2,1)");
  CHECK(monomial_str(diagonal_element(2, {1, 1, 0}), 2) == "(-1,-1,1)");
  CHECK(monomial_str(permutation_element({1, 0, 2}), 4) == "(1,1,1)[2,1,3]");
}
