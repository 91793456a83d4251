#pragma once

#include "avq/catalog/builtin.hpp"
#include "avq/catalog/lattices.hpp"
#include "avq/catalog/sporadic.hpp"
#include "avq/groups/matrix_group.hpp"

#include <algorithm>
#include <random>

namespace avq::test {

inline MatZ mz(std::initializer_list<std::initializer_list<long>> rows) {
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

inline TorsionPoint point(std::initializer_list<Rat> c) {
  VecQ v(c);
  return TorsionPoint::from_rationals(v);
}

inline TorsionPoint random_point(std::mt19937_64 &rng, std::size_t dim, int max_level) {
  int level = std::uniform_int_distribution<int>(1, max_level)(rng);
  std::uniform_int_distribution<int> num(0, level - 1);
  VecQ c(dim);
  for (auto &x : c)
    x = make_rat(Int(num(rng)), Int(level));
  return TorsionPoint::from_rationals(c);
}

// g x == x mod Z^d, evaluated with rational matrix arithmetic only.
inline bool fixes(const LinearElement &g, const VecQ &x) {
  MatZ m = g.to_matrix();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rat s = -x[i];
    for (std::size_t j = 0; j < m.cols(); ++j)
      s += Rat(m(i, j)) * x[j];
    if (!is_integer(s))
      return false;
  }
  return true;
}

inline std::vector<LinearElement> oracle_stabilizer(const std::vector<LinearElement> &els, const TorsionPoint &x) {
  VecQ c = x.coordinates();
  std::vector<LinearElement> out;
  for (const auto &g : els)
    if (fixes(g, c))
      out.push_back(g);
  std::sort(out.begin(), out.end());
  return out;
}

// Every monomial element of G(m,p,n): exponent vectors with sum divisible by
// p, times every permutation.
inline std::vector<LinearElement> monomial_oracle(int m, int p, int n) {
  std::vector<LinearElement> out;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i)
    perm[i] = i;
  do {
    LinearElement pe = permutation_element(perm);
    std::vector<int> e(n, 0);
    while (true) {
      int s = 0;
      for (int a : e)
        s += a;
      if (s % p == 0)
        out.push_back(diagonal_element(m, e) * pe);
      int k = 0;
      while (k < n && ++e[k] == m)
        e[k++] = 0;
      if (k == n)
        break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::filesystem::path data_dir() { return default_data_dir(); }

}  // namespace avq::test
