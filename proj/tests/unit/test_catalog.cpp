#include "avq/smooth/tables.hpp"
#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <set>

using namespace avq;
using namespace avq::test;
using nlohmann::json;

namespace {

std::filesystem::path scratch_file(const std::string &name, const json &j) {
  auto p = std::filesystem::temp_directory_path() / ("avq_test_" + name + ".json");
  std::ofstream(p) << j.dump(2);
  return p;
}

json load_json(const std::filesystem::path &p) {
  std::ifstream in(p);
  return json::parse(in);
}

void reseal(json &j) {
  j.erase("checksum");
  j["checksum"] = fnv1a_hex(j.dump());
}

// Lattice given by rational basis columns is stable under every generator.
bool stable(const Scenario &s, const MatQ &basis) {
  auto l = RationalLattice::from_generators(basis);
  for (const auto &g : s.group.generators())
    if (!l.contains(RationalLattice::from_generators(to_rational(g.to_matrix()) * basis)))
      return false;
  return true;
}

}  // namespace

TEST_CASE("G(m,p,n) builders") {
  CHECK(build_gmpn(2, 1, 3).group.order() == 48);
  CHECK(build_gmpn(6, 6, 3).group.order() == 216);
  CHECK_THROWS_AS(build_gmpn(4, 3, 3), ValidationError);
  CHECK_THROWS_AS(build_gmpn(5, 1, 3), ValidationError);
  for (const auto &label : builtin_labels())
    CHECK_NOTHROW(builtin_scenario(label).validate());
  CHECK_THROWS_AS(builtin_scenario("gmpn-3"), ValidationError);
}

TEST_CASE("examples (a) and (b)") {
  auto b3 = build_example_b(3);
  std::size_t transpositions = 0;
  for (const auto &g : b3.group.elements())
    if (g.trace() == 2) {
      ++transpositions;
      CHECK(is_pseudoreflection(g).is_reflection);
    }
  CHECK(transpositions == 6);
  CHECK(pseudoreflections(b3.group.elements()).size() == 6);

  auto a6 = build_example_a(6, 3);
  for (int k = 0; k < 3; ++k) {
    std::vector<int> e(3, 0);
    e[k] = 1;
    auto sigma = diagonal_element(6, e);
    CHECK(is_pseudoreflection(sigma).is_reflection);
    CHECK(subtorus_intersection_group(reflection_curve(a6.torus, sigma), reflection_complement(a6.torus, sigma))
              .order() == 1);
  }
}

// Pseudoreflections of G(m,p,n): the m * C(n,2) elements (zeta^a, zeta^-a)
// times a transposition, and the n (m/p - 1) diagonal ones zeta^{kp}.
TEST_CASE("pseudoreflection census of G(m,p,3)") {
  for (int m : {2, 3, 4, 6})
    for (int p = 1; p <= m; ++p) {
      if (m % p)
        continue;
      CAPTURE(m);
      CAPTURE(p);
      const int n = 3;
      std::set<LinearElement> expected;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int a = 0; a < m; ++a) {
            std::vector<int> e(n, 0), perm{0, 1, 2};
            e[i] = a;
            e[j] = m - a;
            std::swap(perm[i], perm[j]);
            expected.insert(diagonal_element(m, e) * permutation_element(perm));
          }
      for (int i = 0; i < n; ++i)
        for (int k = p; k < m; k += p) {
          std::vector<int> e(n, 0);
          e[i] = k;
          expected.insert(diagonal_element(m, e));
        }
      CHECK(expected.size() == static_cast<std::size_t>(m * 3 + n * (m / p - 1)));
      auto s = build_gmpn(m, p, n);
      auto found = pseudoreflections(s.group.elements());
      CHECK(std::set<LinearElement>(found.begin(), found.end()) == expected);
    }
}

TEST_CASE("hyperplanar kernels") {
  CHECK(build_hyperplanar_delta(2, 2, 3).delta->order() == 16);
  CHECK(build_hyperplanar_delta(3, 3, 3).delta->order() == 9);
  CHECK(build_hyperplanar_delta(4, 4, 3).delta->order() == 4);
  CHECK_THROWS_AS(build_hyperplanar_delta(6, 6, 3), ValidationError);
  CHECK(FiniteSubgroup::generated_by(2, invariant_curve_points(2)).order() == 4);
  CHECK(FiniteSubgroup::generated_by(2, invariant_curve_points(3)).order() == 3);
  CHECK(FiniteSubgroup::generated_by(2, invariant_curve_points(4)).order() == 2);
  // for m = 3, 4 one hyperplanar element already generates the whole kernel
  for (int m : {3, 4}) {
    auto s = build_hyperplanar_delta(m, m, 3);
    TorsionPoint e = invariant_curve_points(m).back();
    VecQ c(6, Rat(0));
    c[0] = e.coordinates()[0];
    c[1] = e.coordinates()[1];
    c[2] = -c[0];
    c[3] = -c[1];
    std::vector<TorsionPoint> orbit;
    for (const auto &g : s.group.elements())
      orbit.push_back(g.act(TorsionPoint::from_rationals(c)));
    CHECK(FiniteSubgroup::generated_by(6, orbit).order() == s.delta->order());
  }
}

TEST_CASE("root lattices") {
  for (const char *label : {"example-a-2-3", "example-a-3-3", "example-a-4-3", "example-a-6-3", "example-b-3"}) {
    CAPTURE(label);
    auto r = root_lattice(builtin_scenario(label));
    CHECK(r.lattice.is_full());
    CHECK(r.index == 1);
  }
  auto s = build_example_a(3, 3);
  auto doubled = rebase(s, Rat(2) * MatQ::identity(6), "doubled");
  CHECK(root_lattice(doubled).index == 1);
  // G(2,2,3) = D3: the root lattice has index 2 in Z^3 (per real part)
  auto d3 = root_lattice(build_gmpn(2, 2, 3));
  CHECK(d3.index == 4);
  CHECK(stable(build_gmpn(2, 2, 3), to_rational(d3.lattice.basis())));
}

TEST_CASE("fnv1a") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("sporadic loader") {
  auto path = sporadic_path(data_dir(), 4);
  auto s = load_sporadic(path);
  CHECK(s.st_number == 4);
  CHECK(s.group.order() == 24);
  CHECK(pseudoreflections(s.group.elements()).size() == 8);
  CHECK(s.named_vectors.count("d1") == 1);

  json j = load_json(path);
  json bad = j;
  bad["source"] = "edited";
  CHECK_THROWS_WITH_AS(load_sporadic(scratch_file("checksum", bad)), doctest::Contains("checksum"), ValidationError);

  json doubled = j;
  for (auto &row : doubled["generators"][0])
    for (auto &entry : row)
      for (auto &c : entry)
        c = std::to_string(2 * std::stol(c.get<std::string>()));
  reseal(doubled);
  CHECK_THROWS_WITH_AS(load_sporadic(scratch_file("unimodular", doubled)), doctest::Contains("unimodular"),
                       ValidationError);

  json resealed = j;
  reseal(resealed);
  CHECK(resealed["checksum"] == j["checksum"]);
}

TEST_CASE("every shipped data file loads with its declared order") {
  for (const auto &entry : std::filesystem::directory_iterator(data_dir() / "sporadic")) {
    CAPTURE(entry.path().string());
    auto d = load_sporadic_data(entry.path());
    auto s = sporadic_scenario(d);
    CHECK_NOTHROW(s.validate());
    if (d.order <= 200'000)
      CHECK(s.group.order() == d.order);
  }
}

TEST_CASE("intermediate lattices") {
  auto dir = data_dir();
  auto count = [&](const std::string &name) {
    auto s = load_sporadic(dir / "sporadic" / (name + ".json"));
    auto r = s_matrix_and_intermediate_lattices(s, false);
    for (const auto &l : r.lattices)
      CHECK(stable(s, l.basis));
    CHECK(r.lattices.front().index == 1);
    return r;
  };
  auto st4 = count("st04");
  CHECK(st4.lattices.size() == 5);
  CHECK(st4.quotient_factors == std::vector<Int>{2, 2});
  CHECK(st4.action_trivial);
  CHECK(abs(st4.det_real) == 4);
  auto st25 = count("st25");
  CHECK(st25.lattices.size() == 2);
  CHECK(st25.quotient_factors == std::vector<Int>{3});
  CHECK(count("st35").lattices.size() == 6);
  CHECK(count("st12").lattices.size() == 1);
  // generation is checked by closure and the designated set is valid for st04
  CHECK_NOTHROW(s_matrix_and_intermediate_lattices(load_sporadic(dir / "sporadic/st04.json"), true));

  auto a6 = s_matrix_and_intermediate_lattices(build_example_a(6, 3));
  CHECK(abs(a6.det_real) == 1);
  CHECK(a6.lattices.size() == 1);
  CHECK_THROWS_AS(s_matrix_and_intermediate_lattices(build_gmpn(4, 2, 3)), ValidationError);
}

TEST_CASE("lattice specs") {
  auto s = load_sporadic(sporadic_path(data_dir(), 4));
  auto b = lattice_from_spec(s, "d1@1");
  CHECK(b(0, 0) == Rat(1, 2));
  CHECK_THROWS_AS(lattice_from_spec(s, "d2@2"), ValidationError);
  CHECK_THROWS_AS(lattice_from_spec(s, "d9@1"), ValidationError);
  CHECK_THROWS_AS(lattice_from_spec(s, "d1"), ValidationError);
  CHECK(RationalLattice::from_generators(lattice_from_spec(s, "d1@1,d2@2")) ==
        RationalLattice::from_generators(lattice_from_spec(s, "d1+d2@2").hconcat(lattice_from_spec(s, "d1@1"))));
}

TEST_CASE("sporadic rows") {
  auto dir = data_dir();
  auto r12 = sporadic_row_report(dir, {"st12", "root", "(0,0,0,1/2)"});
  CHECK(r12.s0_order == 16);
  CHECK(r12.p0_order == 8);
  auto r4 = sporadic_row_report(dir, {"st04", "d1+d2@2", "(0,1/2,1/2,0)"});
  CHECK(r4.s0_order == 6);
  CHECK(r4.p0_order == 3);
}
