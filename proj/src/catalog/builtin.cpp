#include "avq/catalog/builtin.hpp"

#include <sstream>

namespace avq {

namespace {

void check_family(int m, int p, int n) {
  if (m != 2 && m != 3 && m != 4 && m != 6)
    throw ValidationError("m must be one of 2, 3, 4, 6 (got " + std::to_string(m) + ")");
  if (p < 1 || m % p != 0)
    throw ValidationError("p = " + std::to_string(p) + " does not divide m = " + std::to_string(m));
  if (n < 2)
    throw ValidationError("n must be at least 2");
}

MatZ power(const MatZ &b, int k) {
  MatZ r = MatZ::identity(b.rows());
  for (int i = 0; i < k; ++i)
    r = r * b;
  return r;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i)
    f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<int> transposition(int n, int i, int j) {
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k)
    perm[k] = k;
  std::swap(perm[i], perm[j]);
  return perm;
}

// Saturated lattice of the coordinates first..n-1 (complex coordinates).
LatticeBasis tail_direction(int n, int first) {
  MatZ b(2 * n, 2 * (n - first));
  for (int k = first; k < n; ++k)
    for (int r = 0; r < 2; ++r)
      b(2 * k + r, 2 * (k - first) + r) = 1;
  return LatticeBasis::from_generators(b);
}

TorsionPoint place(int n, const std::vector<std::pair<int, TorsionPoint>> &entries) {
  VecQ c(2 * n, Rat(0));
  for (const auto &[k, pt] : entries) {
    VecQ v = pt.coordinates();
    c[2 * k] += v[0];
    c[2 * k + 1] += v[1];
  }
  return TorsionPoint::from_rationals(c);
}

TorsionPoint on_curve(Rat a, Rat b) { return curve_point({{std::move(a), std::move(b)}}); }

std::vector<int> exps(int n, std::initializer_list<int> head) {
  std::vector<int> e(head);
  e.resize(n, 0);
  return e;
}

}  // namespace

LinearElement diagonal_element(int m, const std::vector<int> &exponents) {
  const std::size_t n = exponents.size();
  MatZ z = zeta_block(m);
  MatZ g(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    MatZ b = power(z, ((exponents[k] % m) + m) % m);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        g(2 * k + i, 2 * k + j) = b(i, j);
  }
  return LinearElement::from_matrix(g);
}

LinearElement permutation_element(const std::vector<int> &perm) {
  const std::size_t n = perm.size();
  MatZ g(2 * n, 2 * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < 2; ++r)
      g(2 * perm[j] + r, 2 * j + r) = 1;
  return LinearElement::from_matrix(g);
}

TorsionPoint curve_point(const std::vector<std::pair<Rat, Rat>> &coords) {
  VecQ c;
  for (const auto &[a, b] : coords) {
    c.push_back(a);
    c.push_back(b);
  }
  return TorsionPoint::from_rationals(c);
}

Scenario build_gmpn(int m, int p, int n) {
  check_family(m, p, n);
  std::vector<LinearElement> gens;
  std::vector<std::size_t> designated;
  if (p < m)
    gens.push_back(diagonal_element(m, exps(n, {p})));
  const std::size_t first_transposition = gens.size();
  for (int k = 0; k + 1 < n; ++k)
    gens.push_back(permutation_element(transposition(n, k, k + 1)));
  // rho * (1 2), a pseudoreflection of type I with a = 1
  gens.push_back(diagonal_element(m, exps(n, {1, -1})) * permutation_element(transposition(n, 0, 1)));
  if (p == 1) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
      designated.push_back(i);
  } else if (p == m) {
    for (std::size_t i = first_transposition; i < gens.size(); ++i)
      designated.push_back(i);
  }
  Scenario s;
  std::ostringstream label;
  label << "gmpn-" << m << "-" << p << "-" << n;
  s.label = label.str();
  s.torus = ComplexTorus::cm_power(m, static_cast<std::size_t>(n));
  s.group = FiniteMatrixGroup(2 * n, std::move(gens), "G(" + std::to_string(m) + "," + std::to_string(p) + "," +
                                                            std::to_string(n) + ")");
  std::uint64_t order = factorial(n);
  for (int k = 0; k < n; ++k)
    order *= static_cast<std::uint64_t>(m);
  order /= static_cast<std::uint64_t>(p);
  s.group.set_declared_order(order);
  s.basis_note = "E_" + std::to_string(m) + "^" + std::to_string(n) + ", coordinates (x_k, zeta x_k) interleaved";
  s.m = m;
  s.p = p;
  s.n = n;
  s.designated_reflections = std::move(designated);
  return s;
}

Scenario build_example_a(int m, int n) {
  Scenario s = build_gmpn(m, 1, n);
  s.label = "example-a-" + std::to_string(m) + "-" + std::to_string(n);
  return s;
}

Scenario build_example_b(int n) {
  if (n < 2)
    throw ValidationError("example (b) needs n >= 2");
  const std::size_t d = 2 * static_cast<std::size_t>(n);
  std::vector<LinearElement> gens;
  for (int j = 0; j < n; ++j) {
    // s_j = (j j+1) on the simple roots alpha_k = e_k - e_{k+1}
    MatZ a = MatZ::identity(n);
    a(j, j) = -1;
    if (j > 0)
      a(j, j - 1) = 1;
    if (j + 1 < n)
      a(j, j + 1) = 1;
    MatZ g(d, d);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        for (int t = 0; t < 2; ++t)
          g(2 * r + t, 2 * c + t) = a(r, c);
    gens.push_back(LinearElement::from_matrix(g));
  }
  Scenario s;
  s.label = "example-b-" + std::to_string(n);
  MatZ k(d, d);
  for (int b = 0; b < n; ++b) {
    k(2 * b, 2 * b + 1) = -1;
    k(2 * b + 1, 2 * b) = 1;
  }
  s.torus = ComplexTorus(to_rational(k), 1, 0);
  s.group = FiniteMatrixGroup(d, std::move(gens), "S_" + std::to_string(n + 1));
  s.group.set_declared_order(factorial(n + 1));
  s.basis_note = "sum-zero sublattice of Z[i]^" + std::to_string(n + 1) + ", basis (e_k - e_{k+1}) x {1, i}";
  s.n = n;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
    s.designated_reflections.push_back(i);
  return s;
}

std::vector<TorsionPoint> invariant_curve_points(int m) {
  switch (m) {
  case 2:
    return {on_curve(Rat(1, 2), 0), on_curve(0, Rat(1, 2))};
  case 3:
    return {on_curve(Rat(2, 3), Rat(1, 3))};
  case 4:
    return {on_curve(Rat(1, 2), Rat(1, 2))};
  default:
    throw ValidationError("E_0 is trivial for m = " + std::to_string(m));
  }
}

Scenario build_hyperplanar_delta(int m, int p, int n) {
  check_family(m, p, n);
  if (m == 6)
    throw ValidationError("a nontrivial kernel is impossible for m = 6");
  Scenario s = build_gmpn(m, p, n);
  std::vector<TorsionPoint> pts;
  for (const auto &e : invariant_curve_points(m))
    for (int k = 0; k + 1 < n; ++k)
      pts.push_back(place(n, {{k, e}, {k + 1, -e}}));
  s.delta = FiniteSubgroup::generated_by(2 * n, std::move(pts));
  s.label = "hyperplanar-" + std::to_string(m) + "-" + std::to_string(p) + "-" + std::to_string(n);
  return s;
}

Scenario build_incomplete_hyperplanar(int p, int n) {
  Scenario s = build_gmpn(2, p, n);
  TorsionPoint t = on_curve(Rat(1, 2), 0);
  std::vector<TorsionPoint> pts;
  for (int k = 0; k + 1 < n; ++k)
    pts.push_back(place(n, {{k, t}, {k + 1, t}}));
  s.delta = FiniteSubgroup::generated_by(2 * n, std::move(pts));
  s.label = "incomplete-" + std::to_string(p) + "-" + std::to_string(n);
  return s;
}

Scenario build_diagonal_delta(int m, int p, int n) {
  check_family(m, p, n);
  if (m == 6)
    throw ValidationError("a nontrivial kernel is impossible for m = 6");
  Scenario s = build_gmpn(m, p, n);
  TorsionPoint e = invariant_curve_points(m).front();
  std::vector<std::pair<int, TorsionPoint>> entries;
  for (int k = 0; k < n; ++k)
    entries.emplace_back(k, e);
  s.delta = FiniteSubgroup::generated_by(2 * n, {place(n, entries)});
  s.label = "diagonal-" + std::to_string(m) + "-" + std::to_string(p) + "-" + std::to_string(n);
  return s;
}

Scenario build_sn_diagonal_delta(int n) {
  Scenario s = build_example_b(n);
  // (t,...,t) with t = 1/(n+1) has simple-root coordinates (t, 2t, ..., nt)
  VecQ c(2 * n, Rat(0));
  for (int k = 0; k < n; ++k)
    c[2 * k] = make_rat(Int(k + 1), Int(n + 1));
  s.delta = FiniteSubgroup::generated_by(2 * n, {TorsionPoint::from_rationals(c)});
  s.label = "sn-diagonal-" + std::to_string(n);
  return s;
}

WitnessCase witness_points(int m, int p, int n, const std::string &which) {
  check_family(m, p, n);
  WitnessCase w;
  const std::size_t d = 2 * static_cast<std::size_t>(n);
  auto linear = [&](std::initializer_list<int> head) {
    return AffineElement{diagonal_element(m, exps(n, head)), TorsionPoint(d)};
  };
  std::ostringstream label;
  label << which << "-" << m << "-" << p << "-" << n;
  w.label = label.str();

  if (which == "prop33") {
    if (n < 3 || p < 2)
      throw ValidationError("prop33 needs p >= 2 and n >= 3");
    w.scenario = build_gmpn(m, p, n);
    TorsionPoint t;
    if (m == 2 || (m == 6 && p == 2))
      t = on_curve(Rat(1, 2), 0);
    else if (m == 3)
      t = on_curve(Rat(2, 3), Rat(1, 3));
    else if (m == 6)
      t = on_curve(Rat(1, 3), Rat(1, 3));
    else
      t = on_curve(Rat(1, 2), Rat(1, 2));
    w.base = place(n, {{0, t}});
    w.direction = tail_direction(n, 2);
    const int key = m * 10 + p;
    switch (key) {
    case 22:
      w.expected = {linear({1, 1})};
      break;
    case 33:
      w.expected = {linear({1, 2})};
      break;
    case 42:
      w.expected = {linear({1, 1}), linear({2, 0}), linear({0, 2})};
      break;
    case 44:
      w.expected = {linear({1, 3})};
      break;
    case 62:
      w.expected = {linear({3, 3}), linear({0, 2})};
      break;
    case 63:
      w.expected = {linear({2, 4}), linear({0, 3})};
      break;
    case 66:
      w.expected = {linear({2, 4})};
      break;
    default:
      throw ValidationError("prop33 has no row for (m,p) = (" + std::to_string(m) + "," + std::to_string(p) + ")");
    }
    return w;
  }

  if (which == "prop35") {
    if (m != 2 || n < 3)
      throw ValidationError("prop35 needs m = 2 and n >= 3");
    w.scenario = build_incomplete_hyperplanar(p, n);
    TorsionPoint t = on_curve(Rat(1, 2), 0);
    TorsionPoint t1 = on_curve(Rat(1, 4), 0);
    TorsionPoint t2 = on_curve(Rat(1, 4), Rat(1, 2));
    w.base = place(n, {{0, t1}, {1, t2}});
    w.direction = tail_direction(n, 2);
    w.expected = {AffineElement{diagonal_element(2, exps(n, {1, 1})), place(n, {{0, t}, {1, t}})}};
    return w;
  }

  if (which == "prop36") {
    w.scenario = build_hyperplanar_delta(m, p, n);
    if (m == 2) {
      TorsionPoint a = on_curve(Rat(1, 2), 0), b = on_curve(0, Rat(1, 2)), c = on_curve(Rat(1, 2), Rat(1, 2));
      TorsionPoint a1 = on_curve(Rat(1, 4), 0), b1 = on_curve(0, Rat(1, 4)), c1 = on_curve(Rat(1, 4), Rat(1, 4));
      if (n >= 4) {
        w.base = place(n, {{1, a1}, {2, b1}, {3, c1}});
        w.direction = tail_direction(n, 4);
        w.expected = {AffineElement{diagonal_element(2, exps(n, {1, 1, 1, 1})), place(n, {{1, a}, {2, b}, {3, c}})}};
        if (p == 1)
          w.expected.push_back(linear({1}));
      } else if (n == 3 && p == 1) {
        w.base = place(n, {{0, a1}, {1, b1}, {2, c1}});
        w.direction = LatticeBasis(d);
        w.expected = {AffineElement{diagonal_element(2, exps(n, {1, 1, 1})), place(n, {{0, a}, {1, b}, {2, c}})}};
      } else {
        throw ValidationError("prop36 with m = 2 needs n >= 4 or (p,n) = (1,3)");
      }
      return w;
    }
    if (n < 3)
      throw ValidationError("prop36 needs n >= 3");
    w.direction = tail_direction(n, 3);
    if (m == 3) {
      TorsionPoint dd = on_curve(Rat(1, 3), 0);
      // e = zeta_3 d - d
      TorsionPoint e = diagonal_element(3, {1}).act(dd) - dd;
      w.base = place(n, {{1, dd}, {2, dd + dd}});
      w.expected = {AffineElement{diagonal_element(3, exps(n, {1, 1, 1})), place(n, {{1, e + e}, {2, e}})}};
      if (p == 1)
        w.expected.push_back(linear({1}));
      return w;
    }
    if (m == 4) {
      TorsionPoint dd = on_curve(Rat(1, 2), 0);
      TorsionPoint e = on_curve(Rat(1, 2), Rat(1, 2));
      TorsionPoint e1 = on_curve(Rat(1, 4), Rat(1, 4));
      w.base = place(n, {{1, dd}, {2, e1}});
      w.expected = {AffineElement{diagonal_element(4, exps(n, {1, 1, 2})), place(n, {{1, e}, {2, e}})}};
      if (p <= 2)
        w.expected.push_back(linear({2}));
      if (p == 1)
        w.expected.push_back(linear({1}));
      return w;
    }
    throw ValidationError("prop36 does not apply to m = " + std::to_string(m));
  }
  throw ValidationError("unknown witness construction '" + which + "'");
}

std::vector<std::string> builtin_labels() {
  std::vector<std::string> out;
  for (int m : {2, 3, 4, 6})
    out.push_back("example-a-" + std::to_string(m) + "-3");
  out.push_back("example-b-2");
  out.push_back("example-b-3");
  for (int m : {2, 3, 4, 6})
    for (int p = 1; p <= m; ++p)
      if (m % p == 0)
        out.push_back("gmpn-" + std::to_string(m) + "-" + std::to_string(p) + "-3");
  for (int m : {2, 3, 4})
    for (int p = 1; p <= m; ++p)
      if (m % p == 0)
        out.push_back("hyperplanar-" + std::to_string(m) + "-" + std::to_string(p) + "-3");
  out.push_back("hyperplanar-2-1-4");
  out.push_back("hyperplanar-2-2-4");
  out.push_back("incomplete-1-3");
  out.push_back("incomplete-2-3");
  out.push_back("diagonal-2-1-3");
  out.push_back("sn-diagonal-3");
  return out;
}

Scenario builtin_scenario(const std::string &label) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : label) {
    if (c == '-') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  auto num = [&](std::size_t i) {
    if (i >= parts.size())
      throw ValidationError("malformed scenario label '" + label + "'");
    try {
      std::size_t used = 0;
      int v = std::stoi(parts[i], &used);
      if (used != parts[i].size())
        throw ValidationError("");
      return v;
    } catch (const std::exception &) {
      throw ValidationError("malformed scenario label '" + label + "'");
    }
  };
  auto arity = [&](std::size_t k) {
    if (parts.size() != k)
      throw ValidationError("malformed scenario label '" + label + "'");
  };
  const std::string &kind = parts[0];
  if (kind == "example" && parts.size() >= 2 && parts[1] == "a") {
    arity(4);
    return build_example_a(num(2), num(3));
  }
  if (kind == "example" && parts.size() >= 2 && parts[1] == "b") {
    arity(3);
    return build_example_b(num(2));
  }
  if (kind == "gmpn") {
    arity(4);
    return build_gmpn(num(1), num(2), num(3));
  }
  if (kind == "hyperplanar") {
    arity(4);
    return build_hyperplanar_delta(num(1), num(2), num(3));
  }
  if (kind == "incomplete") {
    arity(3);
    return build_incomplete_hyperplanar(num(1), num(2));
  }
  if (kind == "diagonal") {
    arity(4);
    return build_diagonal_delta(num(1), num(2), num(3));
  }
  if (kind == "sn" && parts.size() == 3 && parts[1] == "diagonal")
    return build_sn_diagonal_delta(num(2));
  throw ValidationError("unknown scenario '" + label + "'");
}

}  // namespace avq
