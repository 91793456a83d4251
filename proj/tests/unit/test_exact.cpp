#include "avq/exact/cyclotomic.hpp"
#include "avq/exact/lattice.hpp"
#include "avq/exact/normal_form.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace avq;

namespace {

MatZ mz(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size(), c = rows.begin()->size();
  MatZ m(r, c);
  std::size_t i = 0;
  for (auto &row : rows) {
    std::size_t j = 0;
    for (long v : row)
      m(i, j++) = Int(v);
    ++i;
  }
  return m;
}

MatZ random_matrix(std::mt19937 &rng, std::size_t r, std::size_t c, int span) {
  std::uniform_int_distribution<int> d(-span, span);
  MatZ m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = d(rng);
  return m;
}

// gcd of all k x k minors, computed by brute force
Int minor_gcd(const MatZ &m, std::size_t k) {
  Int g = 0;
  std::vector<std::size_t> rs(k), cs(k);
  std::function<void(std::size_t, std::size_t, std::vector<std::size_t> &, std::size_t,
                     std::function<void()>)>
      choose = [&](std::size_t start, std::size_t n, std::vector<std::size_t> &out, std::size_t pos,
                   std::function<void()> f) {
        if (pos == out.size()) {
          f();
          return;
        }
        for (std::size_t i = start; i < n; ++i) {
          out[pos] = i;
          choose(i + 1, n, out, pos + 1, f);
        }
      };
  choose(0, m.rows(), rs, 0, [&] {
    choose(0, m.cols(), cs, 0, [&] {
      MatZ sub(k, k);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
          sub(a, b) = m(rs[a], cs[b]);
      Int d = determinant(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
  });
  return g;
}

}  // namespace

TEST_CASE("hnf of a row vector") {
  auto r = hnf(mz({{2, 4}}));
  CHECK(r.h == mz({{2, 0}}));
  CHECK(r.rank == 1);
  CHECK(r.h == mz({{2, 4}}) * r.u);
  CHECK(abs(determinant(r.u)) == 1);
}

TEST_CASE("hnf shape on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    MatZ m = random_matrix(rng, 1 + trial % 5, 1 + (trial / 5) % 5, 6);
    auto r = hnf(m);
    REQUIRE(r.h == m * r.u);
    REQUIRE(abs(determinant(r.u)) == 1);
    CHECK(r.rank == rank(m));
    std::size_t last = 0;
    for (std::size_t j = 0; j < r.rank; ++j) {
      std::size_t p = r.pivot_rows[j];
      CHECK(r.h(p, j) > 0);
      if (j)
        CHECK(p > last);
      last = p;
      for (std::size_t i = 0; i < p; ++i)
        CHECK(r.h(i, j) == 0);
      for (std::size_t jj = 0; jj < j; ++jj) {
        CHECK(r.h(p, jj) >= 0);
        CHECK(r.h(p, jj) < r.h(p, j));
      }
    }
    for (std::size_t j = r.rank; j < m.cols(); ++j)
      CHECK(r.h.col(j) == VecZ(m.rows(), 0));
  }
}

TEST_CASE("snf small cases") {
  auto s = snf(mz({{2, 0}, {0, 3}}));
  CHECK(s.diagonal == std::vector<Int>{1, 6});
  auto t = snf(mz({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  CHECK(t.diagonal == std::vector<Int>{2, 6, 12});
}

TEST_CASE("snf against determinantal divisors") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    MatZ m = random_matrix(rng, 2 + trial % 3, 2 + (trial / 3) % 3, 5);
    auto s = snf(m);
    REQUIRE(s.d == s.u * m * s.v);
    REQUIRE(abs(determinant(s.u)) == 1);
    REQUIRE(abs(determinant(s.v)) == 1);
    Int prod = 1;
    for (std::size_t k = 1; k <= s.rank; ++k) {
      prod *= s.diagonal[k - 1];
      CHECK(prod == minor_gcd(m, k));
      if (k > 1)
        CHECK(s.diagonal[k - 1] % s.diagonal[k - 2] == 0);
    }
  }
}

TEST_CASE("saturation and meet/join") {
  auto l = LatticeBasis::from_generators(mz({{1, 1}, {1, -1}}));
  CHECK(saturate(l) == LatticeBasis::full(2));
  CHECK(!is_saturated(l));
  auto a = LatticeBasis::from_generators(mz({{2}, {0}}));
  auto mj = lattice_meet_join(a, l);
  CHECK(mj.intersection == a);
  CHECK(mj.sum == LatticeBasis::from_generators(mz({{1, 0}, {1, 2}})));
  CHECK(lattice_index(LatticeBasis::full(2), mj.sum) == 2);
}

TEST_CASE("quotient of Z^2 by 2Z^2") {
  auto q = quotient_structure(LatticeBasis::full(2), LatticeBasis::from_generators(mz({{2, 0}, {0, 2}})));
  CHECK(q.invariant_factors == std::vector<Int>{2, 2});
  CHECK(q.representatives.size() == 4);
  CHECK(q.order() == 4);
}

TEST_CASE("kernel is saturated") {
  MatZ m = mz({{2, 4, 6}});
  MatZ k = integer_kernel(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
  CHECK(is_saturated(LatticeBasis::from_generators(k)));
}

TEST_CASE("solve_mod_one counts components") {
  // 2x == 0 mod 1 on the circle: two points
  auto s = solve_mod_one(mz({{2}}), VecQ{Rat(0)});
  CHECK(s.solvable);
  CHECK(s.component_count == 2);
  CHECK(s.points.size() == 2);
  // 2x == 1/2 mod 1: x in {1/4, 3/4}
  auto t = solve_mod_one(mz({{2}}), VecQ{Rat(1, 2)});
  REQUIRE(t.points.size() == 2);
  CHECK(t.points[0][0] == Rat(1, 4));
  // 0 * x == 1/2 has no solution
  CHECK(!solve_mod_one(mz({{0}}), VecQ{Rat(1, 2)}).solvable);
  // x1 - x2 == 0 on the 2-torus: the diagonal circle
  auto d = solve_mod_one(mz({{1, -1}}), VecQ{Rat(0)});
  CHECK(d.component_count == 1);
  CHECK(d.direction.cols() == 1);
}

TEST_CASE("solve_mod_one against brute force on a grid") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    MatZ m = random_matrix(rng, 2, 2, 3);
    if (rank(m) < 2)
      continue;
    // all solutions are torsion of level |det|; check on the (det)-grid
    Int det = abs(determinant(m));
    long n = det.get_si();
    std::size_t count = 0;
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b) {
        Rat x = make_rat(a, n), y = make_rat(b, n);
        Rat u = Rat(m(0, 0)) * x + Rat(m(0, 1)) * y;
        Rat v = Rat(m(1, 0)) * x + Rat(m(1, 1)) * y;
        if (is_integer(u) && is_integer(v))
          ++count;
      }
    auto s = solve_mod_one(m, VecQ{Rat(0), Rat(0)});
    CHECK(s.component_count == Int(static_cast<unsigned long>(count)));
  }
}

TEST_CASE("cyclotomic polynomials and zeta matrices") {
  CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
  for (int k : {3, 4, 5, 6, 8, 12}) {
    Cyclotomic z = Cyclotomic::zeta_power(k, 1);
    MatZ m = to_integer(z.multiplication_matrix());
    MatZ p = MatZ::identity(m.rows());
    for (int i = 0; i < k; ++i)
      p = p * m;
    CHECK(p == MatZ::identity(m.rows()));
  }
  Cyclotomic w = Cyclotomic::zeta_power(3, 1);
  CHECK(w * w + w + Cyclotomic::rational(3, Rat(1)) == Cyclotomic::rational(3, Rat(0)));
}
