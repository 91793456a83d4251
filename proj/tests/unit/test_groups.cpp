#include "avq/groups/kernels.hpp"
#include "avq/smooth/audit.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace avq;
using namespace avq::test;

TEST_CASE("closure orders") {
  CHECK(build_gmpn(2, 1, 2).group.order() == 8);
  CHECK(build_example_b(3).group.order() == 24);
  CHECK(build_example_b(2).group.order() == 6);
  // closure equals the set of monomial matrices with exponent sum divisible by p
  for (auto [m, p, n] : std::vector<std::array<int, 3>>{{2, 1, 3}, {3, 3, 3}, {4, 2, 3}, {6, 1, 3}, {4, 4, 3}}) {
    CAPTURE(m);
    CAPTURE(p);
    auto s = build_gmpn(m, p, n);
    auto oracle = monomial_oracle(m, p, n);
    CHECK(s.group.elements() == oracle);
    CHECK(*s.group.declared_order() == oracle.size());
  }
}

TEST_CASE("closure is a group and ignores generator order") {
  auto s = build_gmpn(4, 2, 3);
  const auto &els = s.group.elements();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
  for (int i = 0; i < 200; ++i) {
    const auto &a = els[pick(rng)], &b = els[pick(rng)];
    CHECK(std::binary_search(els.begin(), els.end(), a * b));
    CHECK(std::binary_search(els.begin(), els.end(), a.inverse()));
  }
  auto gens = s.group.generators();
  std::reverse(gens.begin(), gens.end());
  FiniteMatrixGroup g2(s.dim(), gens);
  CHECK(g2.elements() == els);
}

TEST_CASE("closure cap") {
  FiniteMatrixGroup g(6, build_gmpn(6, 1, 3).group.generators());
  CHECK_THROWS_AS(g.elements(100), CapExceeded);
}

TEST_CASE("pseudoreflection detection") {
  CHECK(!is_pseudoreflection(LinearElement(6)).is_reflection);
  auto r = is_pseudoreflection(diagonal_element(2, {1, 0, 0}));
  CHECK(r.is_reflection);
  CHECK(r.order == 2);
  CHECK(r.root_lattice.rank() == 2);
  CHECK(!is_pseudoreflection(diagonal_element(2, {1, 1, 0})).is_reflection);
  auto t = is_pseudoreflection(permutation_element({1, 0, 2}));
  CHECK(t.is_reflection);
  CHECK(t.order == 2);
  CHECK(is_pseudoreflection(diagonal_element(3, {1, 0, 0})).order == 3);
  CHECK(is_pseudoreflection(diagonal_element(6, {0, 5, 0})).order == 6);
}

TEST_CASE("orbit-stabilizer examples") {
  auto s = build_gmpn(2, 1, 2);
  auto zero = orbit_stabilizer(s.group, TorsionPoint(4));
  CHECK(zero.orbit.size() == 1);
  CHECK(zero.stabilizer == s.group.elements());
  auto half = orbit_stabilizer(s.group, point({Rat(1, 2), 0, 0, 0}));
  CHECK(half.orbit.size() == 2);
  CHECK(half.stabilizer.size() == 4);
  CHECK(half.stabilizer == oracle_stabilizer(s.group.elements(), point({Rat(1, 2), 0, 0, 0})));
}

TEST_CASE("schreier stabilizer equals brute force") {
  std::mt19937_64 rng(17);
  for (const char *label : {"gmpn-3-1-3", "gmpn-4-4-3", "example-b-3", "gmpn-6-3-3"}) {
    CAPTURE(label);
    auto s = builtin_scenario(label);
    const auto &els = s.group.elements();
    for (int i = 0; i < 30; ++i) {
      auto x = random_point(rng, s.dim(), 12);
      auto os = orbit_stabilizer(s.group, x);
      CHECK(os.stabilizer == oracle_stabilizer(els, x));
      CHECK(os.stabilizer == stabilizer_brute_force(s.group, x));
      CHECK(os.orbit.size() * os.stabilizer.size() == els.size());
    }
  }
}

TEST_CASE("orbit-stabilizer without closing the group") {
  auto s = build_gmpn(6, 1, 3);
  FiniteMatrixGroup open(s.dim(), s.group.generators());
  open.set_declared_order(1296);
  auto x = point({Rat(1, 2), 0, Rat(1, 3), Rat(2, 3), 0, 0});
  auto os = orbit_stabilizer(open, x);
  CHECK(!open.is_closed());
  CHECK(os.group_order == 1296);
  CHECK(os.stabilizer == oracle_stabilizer(s.group.elements(), x));
}

TEST_CASE("reflection subgroup") {
  auto s = build_gmpn(3, 1, 3);
  auto p = reflection_subgroup(s.group.elements(), s.dim());
  CHECK(p.order() == s.group.order());
  FiniteMatrixGroup h(6, {diagonal_element(2, {1, 1, 0})});
  CHECK(reflection_subgroup(h.elements(), 6).order() == 1);
  CHECK(pseudoreflections(h.elements()).empty());
}

TEST_CASE("affine pseudoreflections") {
  auto tau = permutation_element({1, 0, 2});
  CHECK(is_affine_pseudoreflection({tau, TorsionPoint(6)}));
  CHECK(!is_affine_pseudoreflection({LinearElement(6), point({Rat(1, 2), 0, 0, 0, 0, 0})}));
  // translation on the root line of tau: (t, -t, 0)
  CHECK(is_affine_pseudoreflection({tau, point({Rat(1, 2), 0, Rat(1, 2), 0, 0, 0})}));
  // translation transverse to it is not
  CHECK(!is_affine_pseudoreflection({tau, point({0, 0, 0, 0, Rat(1, 2), 0})}));

  auto s = build_sn_diagonal_delta(3);
  for (const auto &t : s.delta->elements) {
    if (t.is_zero())
      continue;
    for (const auto &g : pseudoreflections(s.group.elements()))
      CHECK(!is_affine_pseudoreflection({g, t}));
  }
}

TEST_CASE("affine composition") {
  std::mt19937_64 rng(2);
  auto s = build_gmpn(4, 1, 2);
  const auto &els = s.group.elements();
  std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
  for (int i = 0; i < 50; ++i) {
    AffineElement a{els[pick(rng)], random_point(rng, 4, 6)}, b{els[pick(rng)], random_point(rng, 4, 6)};
    auto x = random_point(rng, 4, 6);
    auto ab = a * b;
    CHECK(ab.linear == a.linear * b.linear);
    CHECK(ab.translation == a.translation + a.linear.act(b.translation));
    CHECK(ab.act(x) == a.act(b.act(x)));
  }
}

TEST_CASE("affine fixed points") {
  auto minus = diagonal_element(2, {1, 1, 1});
  auto f = affine_fixed_points({minus, point({Rat(1, 3), 0, Rat(1, 2), 0, 0, Rat(1, 4)})});
  CHECK(f.solvable);
  CHECK(f.direction.cols() == 0);
  CHECK(f.component_count == 64);
  // t on a coordinate g fixes, not a half period
  auto g = diagonal_element(2, {0, 0, 1});
  CHECK(!affine_fixed_points({g, point({Rat(1, 3), 0, 0, 0, 0, 0})}).solvable);
  auto all = affine_fixed_points({LinearElement(6), TorsionPoint(6)});
  CHECK(all.solvable);
  CHECK(all.direction.cols() == 6);
  CHECK(all.component_count == 1);
}

TEST_CASE("affine pseudoreflections fix a divisor") {
  auto s = build_hyperplanar_delta(2, 1, 3);
  for (const auto &g : pseudoreflections(s.group.elements()))
    for (const auto &t : s.delta->elements) {
      AffineElement a{g, t};
      if (!is_affine_pseudoreflection(a))
        continue;
      auto f = affine_fixed_points(a);
      REQUIRE(f.solvable);
      CHECK(f.direction.cols() == s.dim() - 2);
    }
}

TEST_CASE("element without eigenvalue one") {
  auto check = [](const Scenario &s) {
    auto g = element_without_eigenvalue_one(s.group);
    MatZ m = g.to_matrix();
    for (std::size_t i = 0; i < m.rows(); ++i)
      m(i, i) -= 1;
    CHECK(determinant(m) != 0);
    return g;
  };
  check(build_gmpn(2, 1, 3));
  auto cyc = check(build_example_b(3));
  CHECK(cyc.order() == 4);
  FiniteMatrixGroup trivial(4, {});
  CHECK_THROWS_AS(element_without_eigenvalue_one(trivial), ValidationError);
  // -I has no eigenvalue one in G(2,1,n)
  auto els = build_gmpn(2, 1, 4).group.elements();
  CHECK(std::binary_search(els.begin(), els.end(), diagonal_element(2, {1, 1, 1, 1})));
}

TEST_CASE("serial and parallel kernels agree") {
  auto s = build_gmpn(6, 1, 3);
  const auto &els = s.group.elements();
  std::vector<LinearElement> a, b;
  kernels::multiply_all_serial(els, els[7], a);
  kernels::multiply_all_parallel(els, els[7], b);
  CHECK(a == b);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10; ++i) {
    auto x = random_point(rng, 6, 12);
    CHECK(kernels::scan_stabilizer_serial(els, x.numerators(), x.denominator()) ==
          kernels::scan_stabilizer_parallel(els, x.numerators(), x.denominator()));
  }
  for (std::size_t c : {0, 2, 4, 6})
    CHECK(kernels::scan_fixed_codim_serial(els, c) == kernels::scan_fixed_codim_parallel(els, c));
}

TEST_CASE("generated order") {
  auto s = build_gmpn(3, 3, 3);
  std::vector<AffineElement> gens;
  for (const auto &g : s.group.generators())
    gens.push_back({g, TorsionPoint(6)});
  CHECK(generated_order(gens, 6) == 54);
}
