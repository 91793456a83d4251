#include "avq/smooth/audit.hpp"

#include "avq/groups/kernels.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

namespace avq {

namespace {

MatZ one_minus(const LinearElement &g) {
  MatZ m = -g.to_matrix();
  for (std::size_t i = 0; i < m.rows(); ++i)
    m(i, i) += 1;
  return m;
}

VecQ apply_q(const MatZ &m, const VecQ &v) {
  VecQ out(m.rows(), Rat(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0)
        out[i] += Rat(m(i, j)) * v[j];
  return out;
}

// g * B == B column by column, in machine integers.
bool fixes_columns(const LinearElement &g, const std::vector<std::vector<std::int64_t>> &cols) {
  const std::size_t d = g.dim();
  for (const auto &c : cols)
    for (std::size_t i = 0; i < d; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < d; ++j)
        s += g(i, j) * c[j];
      if (s != c[i])
        return false;
    }
  return true;
}

std::vector<std::vector<std::int64_t>> columns_i64(const MatZ &b) {
  std::vector<std::vector<std::int64_t>> cols(b.cols(), std::vector<std::int64_t>(b.rows()));
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t i = 0; i < b.rows(); ++i)
      cols[j][i] = to_i64(b(i, j));
  return cols;
}

bool is_reflection(const AffineElement &a, bool affine) {
  return affine ? is_affine_pseudoreflection(a) : a.linear.fixed_codim() == 2;
}

std::vector<AffineElement> greedy_generators(const std::vector<AffineElement> &elements, std::size_t dim) {
  SubgroupBuilder b(dim);
  std::vector<AffineElement> gens;
  for (const auto &e : elements)
    if (b.add_generator(e.linear))
      gens.push_back(e);
  return gens;
}

void sort_by_linear(std::vector<AffineElement> &v) {
  std::sort(v.begin(), v.end(), [](const AffineElement &a, const AffineElement &b) { return a.linear < b.linear; });
}

// Elements (delta, g) of Delta ⋊ G with g T = T pointwise and g x0 + delta = x0.
std::vector<AffineElement> scan_stratum(const Scenario &s, const TorsionPoint &x0, const MatZ &bt) {
  const auto &els = s.group.elements();
  const std::size_t d = s.dim();
  const auto cols = columns_i64(bt);
  std::vector<char> hit(els.size(), 0);
  std::vector<TorsionPoint> trans(els.size());
  const auto n = static_cast<std::ptrdiff_t>(els.size());
  const bool affine = s.is_affine();
#pragma omp parallel for schedule(dynamic, 64) if (kernels::parallel_enabled())
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto &g = els[i];
    if (!fixes_columns(g, cols))
      continue;
    if (!affine) {
      if (g.fixes_mod(x0.numerators().data(), x0.denominator()))
        hit[i] = 1;
      continue;
    }
    TorsionPoint t = x0 - g.act(x0);
    if (s.delta->contains(t)) {
      hit[i] = 1;
      trans[i] = std::move(t);
    }
  }
  std::vector<AffineElement> out;
  for (std::size_t i = 0; i < els.size(); ++i)
    if (hit[i])
      out.push_back({els[i], affine ? trans[i] : TorsionPoint(d)});
  return out;
}

void finish_report(StabilizerReport &r, bool affine, std::size_t dim) {
  sort_by_linear(r.elements);
  r.s0_order = r.elements.size();
  for (const auto &e : r.elements)
    if (is_reflection(e, affine))
      r.pseudoreflections.push_back(e);
  r.p0_order = generated_order(r.pseudoreflections, dim);
  r.generators = greedy_generators(r.elements, dim);
}

}  // namespace

std::uint64_t generated_order(const std::vector<AffineElement> &elements, std::size_t dim) {
  SubgroupBuilder b(dim);
  for (const auto &e : elements)
    b.add_generator(e.linear);
  return b.size();
}

StabilizerReport point_stabilizer_report(const Scenario &s, const TorsionPoint &x) {
  if (x.dim() != s.dim())
    throw ValidationError("point has " + std::to_string(x.dim()) + " coordinates, scenario needs " +
                          std::to_string(s.dim()));
  StabilizerReport r;
  r.point = x;
  if (!s.is_affine()) {
    auto os = orbit_stabilizer(s.group, x);
    for (auto &g : os.stabilizer)
      r.elements.push_back({std::move(g), TorsionPoint(s.dim())});
  } else {
    r.elements = scan_stratum(s, x, MatZ(s.dim(), 0));
  }
  finish_report(r, s.is_affine(), s.dim());
  return r;
}

std::pair<std::string, std::int64_t> stratum_key(const TorsionPoint &x0, const LatticeBasis &t) {
  const std::size_t d = t.ambient();
  if (t.rank() == d)
    return {"full", 1};
  MatZ y = t.rank() == 0 ? MatZ::identity(d) : integer_kernel(t.basis().transpose()).transpose();
  TorsionPoint yx = TorsionPoint::from_rationals(apply_q(y, x0.coordinates()));
  return {t.key() + "@" + yx.str(), yx.denominator()};
}

std::vector<AffineElement> stratum_generic_stabilizer(const Scenario &s, const TorsionPoint &x0,
                                                      const LatticeBasis &t) {
  if (t.rank() == 0 && !s.is_affine()) {
    auto os = orbit_stabilizer(s.group, x0);
    std::vector<AffineElement> out;
    for (auto &g : os.stabilizer)
      out.push_back({std::move(g), TorsionPoint(s.dim())});
    return out;
  }
  auto out = scan_stratum(s, x0, t.basis());
  sort_by_linear(out);
  return out;
}

Stratum make_stratum(const Scenario &s, const TorsionPoint &x0, const LatticeBasis &t, std::size_t depth) {
  Stratum st;
  st.base = x0;
  st.direction = t;
  st.depth = depth;
  st.generic_stabilizer = stratum_generic_stabilizer(s, x0, t);
  std::vector<AffineElement> refl;
  for (const auto &e : st.generic_stabilizer)
    if (is_reflection(e, s.is_affine()))
      refl.push_back(e);
  st.p0_order = generated_order(refl, s.dim());
  std::tie(st.key, st.level) = stratum_key(x0, t);
  return st;
}

std::vector<Stratum> fixed_locus_components(const Scenario &s, const LinearElement &g) {
  if (g.is_identity())
    throw ValidationError("fixed_locus_components: g must not be the identity");
  const std::size_t d = s.dim();
  auto sol = solve_mod_one(one_minus(g), VecQ(d, Rat(0)));
  LatticeBasis dir = LatticeBasis::from_generators(sol.direction);
  std::vector<Stratum> out;
  for (const auto &p : sol.points)
    out.push_back(make_stratum(s, TorsionPoint::from_rationals(p), dir, 1));
  std::sort(out.begin(), out.end(), [](const Stratum &a, const Stratum &b) { return a.key < b.key; });
  return out;
}

std::vector<AffineElement> sampled_generic_stabilizer(const Scenario &s, const Stratum &stratum, std::mt19937_64 &rng,
                                                      std::int64_t prime, int attempts) {
  const std::size_t d = s.dim();
  const std::size_t k = stratum.direction.rank();
  std::uniform_int_distribution<std::int64_t> dist(1, prime - 1);
  std::vector<AffineElement> best;
  for (int a = 0; a < attempts; ++a) {
    VecQ v(k);
    for (auto &c : v)
      c = make_rat(Int(static_cast<long>(dist(rng))), Int(static_cast<long>(prime)));
    VecQ x = stratum.base.coordinates();
    VecQ shift = apply_q(stratum.direction.basis(), v);
    for (std::size_t i = 0; i < d; ++i)
      x[i] += shift[i];
    auto stab = scan_stratum(s, TorsionPoint::from_rationals(x), MatZ(d, 0));
    sort_by_linear(stab);
    best = std::move(stab);
    if (best.size() <= stratum.h_order())
      break;
  }
  return best;
}

AuditOptions AuditOptions::defaults_for(const Scenario &s) {
  AuditOptions o;
  if (s.m == 3)
    o.torsion_levels = {3, 4};
  return o;
}

std::string AuditVerdict::coverage() const {
  std::ostringstream os;
  os << "strata orbits " << strata_orbits << ", depth " << depth_reached << (complete ? " (closed)" : " (depth-limited)");
  os << ", torsion levels";
  if (torsion_levels.empty())
    os << " none";
  for (std::size_t i = 0; i < torsion_levels.size(); ++i)
    os << (i ? "," : " ") << torsion_levels[i];
  os << " (" << torsion_orbits << " orbits)";
  return os.str();
}

namespace {

struct Candidate {
  TorsionPoint x0;
  LatticeBasis t;
};

// Marks every G-translate of x0 + T as seen.
void mark_orbit(const Scenario &a, const TorsionPoint &x0, const LatticeBasis &t,
                std::unordered_set<std::string> &seen) {
  std::vector<Candidate> queue{{x0, t}};
  seen.insert(stratum_key(x0, t).first);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto &g : a.group.generators()) {
      TorsionPoint y = g.act(queue[i].x0);
      LatticeBasis gt = LatticeBasis::from_generators(g.to_matrix() * queue[i].t.basis());
      auto key = stratum_key(y, gt).first;
      if (seen.insert(key).second)
        queue.push_back({std::move(y), std::move(gt)});
    }
  }
}

bool witness_before(const Stratum &a, const Stratum &b) {
  if (a.complex_dim() != b.complex_dim())
    return a.complex_dim() > b.complex_dim();
  if (a.level != b.level)
    return a.level < b.level;
  if (a.h_order() != b.h_order())
    return a.h_order() < b.h_order();
  return a.key < b.key;
}

void torsion_pass(const Scenario &a, const AuditOptions &opt, AuditVerdict &v) {
  const std::size_t d = a.dim();
  const auto &els = a.group.elements();
  std::optional<TorsionPoint> worst;
  std::vector<int> levels = opt.torsion_levels;
  std::sort(levels.begin(), levels.end());
  for (int level : levels) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d && total <= opt.torsion_cap; ++i)
      total *= static_cast<std::uint64_t>(level);
    if (total > opt.torsion_cap)
      continue;
    v.torsion_levels.push_back(level);
    std::vector<char> visited(total, 0);
    std::vector<std::int64_t> x(d), y(d);
    auto encode = [&](const std::vector<std::int64_t> &p) {
      std::uint64_t idx = 0;
      for (std::size_t i = 0; i < d; ++i)
        idx = idx * level + static_cast<std::uint64_t>(p[i]);
      return idx;
    };
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      if (visited[idx])
        continue;
      std::uint64_t r = idx;
      for (std::size_t i = d; i-- > 0;) {
        x[i] = static_cast<std::int64_t>(r % level);
        r /= level;
      }
      std::vector<std::vector<std::int64_t>> orbit{x};
      visited[idx] = 1;
      for (std::size_t k = 0; k < orbit.size(); ++k)
        for (const auto &g : a.group.generators()) {
          g.act_mod(orbit[k].data(), y.data(), level);
          auto e = encode(y);
          if (!visited[e]) {
            visited[e] = 1;
            orbit.push_back(y);
          }
        }
      ++v.torsion_orbits;
      auto hits = kernels::parallel_enabled() ? kernels::scan_stabilizer_parallel(els, x, level)
                                              : kernels::scan_stabilizer_serial(els, x, level);
      SubgroupBuilder refl(d);
      for (auto h : hits)
        if (els[h].fixed_codim() == 2)
          refl.add_generator(els[h]);
      if (refl.size() != hits.size()) {
        ++v.torsion_nonsmooth;
        // the lowest point of the orbit represents it
        TorsionPoint best = TorsionPoint::from_numerators(level, orbit.front());
        for (const auto &p : orbit)
          best = std::min(best, TorsionPoint::from_numerators(level, p));
        if (!worst || best < *worst)
          worst = best;
      }
    }
  }
  if (worst)
    v.point_witness = point_stabilizer_report(a, *worst);
}

}  // namespace

AuditVerdict smoothness_audit(const Scenario &s, const AuditOptions &opt) {
  QuotientChart chart = quotient_chart(s);
  const Scenario &a = chart.scenario;
  const std::size_t d = a.dim();
  const auto &els = a.group.elements();
  AuditVerdict v;
  v.chart = a.label;
  v.complete = true;

  std::vector<Stratum> strata;
  std::unordered_set<std::string> seen;
  strata.push_back(make_stratum(a, TorsionPoint(d), LatticeBasis::full(d), 0));
  seen.insert(strata.front().key);

  for (std::size_t i = 0; i < strata.size(); ++i) {
    const Stratum cur = strata[i];
    v.depth_reached = std::max(v.depth_reached, cur.depth);
    const MatZ &bt = cur.direction.basis();
    const auto cols = columns_i64(bt);
    const VecQ x0 = cur.base.coordinates();
    std::vector<std::vector<Candidate>> found(els.size());
    const auto n = static_cast<std::ptrdiff_t>(els.size());
#pragma omp parallel for schedule(dynamic, 16) if (kernels::parallel_enabled())
    for (std::ptrdiff_t gi = 0; gi < n; ++gi) {
      const auto &g = els[gi];
      if (fixes_columns(g, cols) && g.fixes_mod(cur.base.numerators().data(), cur.base.denominator()))
        continue;  // in the generic stabilizer
      MatZ om = one_minus(g);
      VecQ c = apply_q(om, x0);
      for (auto &e : c)
        e = -e;
      auto sol = solve_mod_one(om * bt, c);
      if (!sol.solvable)
        continue;
      LatticeBasis t2 = LatticeBasis::from_generators(bt * sol.direction);
      for (const auto &p : sol.points) {
        VecQ x = x0;
        VecQ shift = apply_q(bt, p);
        for (std::size_t k = 0; k < d; ++k)
          x[k] += shift[k];
        found[gi].push_back({TorsionPoint::from_rationals(x), t2});
      }
    }
    bool any = false;
    for (const auto &f : found)
      any = any || !f.empty();
    if (cur.depth >= opt.depth) {
      if (any)
        v.complete = false;
      continue;
    }
    for (const auto &f : found)
      for (const auto &c : f) {
        auto key = stratum_key(c.x0, c.t).first;
        if (seen.count(key))
          continue;
        mark_orbit(a, c.x0, c.t, seen);
        strata.push_back(make_stratum(a, c.x0, c.t, cur.depth + 1));
      }
  }
  v.strata_orbits = strata.size();
  for (const auto &st : strata)
    if (!st.smooth())
      v.nonsmooth_strata.push_back(st);
  std::sort(v.nonsmooth_strata.begin(), v.nonsmooth_strata.end(), witness_before);
  if (!v.nonsmooth_strata.empty())
    v.witness = v.nonsmooth_strata.front();

  torsion_pass(a, opt, v);
  v.smooth = v.nonsmooth_strata.empty() && v.torsion_nonsmooth == 0;
  return v;
}

std::vector<TorsionPoint> remark_candidates(const Scenario &s, const LinearElement &g, const MatQ &q) {
  const std::size_t d = s.dim();
  MatZ gm = g.to_matrix();
  MatZ gi = -one_minus(g);
  MatZ k = integer_kernel(gi);
  if (k.cols() == d)
    return {};
  MatZ w;
  if (k.cols() == 0) {
    w = MatZ::identity(d);
  } else {
    MatQ rows = to_rational(k).transpose() * q;
    MatZ ri(rows.rows(), rows.cols());
    for (std::size_t i = 0; i < rows.rows(); ++i) {
      Int den = 1;
      for (std::size_t j = 0; j < rows.cols(); ++j)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), rows(i, j).get_den_mpz_t());
      for (std::size_t j = 0; j < rows.cols(); ++j) {
        Rat x = rows(i, j) * Rat(den);
        ri(i, j) = x.get_num();
      }
    }
    w = integer_kernel(ri);
  }
  MatQ wq = to_rational(w);
  auto gt = solve(wq, to_rational(gm * w));
  if (!gt)
    throw ValidationError("remark_candidates: complement is not g-stable (form not invariant?)");
  MatQ shifted = *gt;
  for (std::size_t i = 0; i < shifted.rows(); ++i)
    shifted(i, i) -= 1;
  MatQ inv = inverse(shifted);
  std::vector<TorsionPoint> out;
  for (std::size_t j = 0; j < inv.cols(); ++j) {
    auto col = inv.col(j);
    bool integral = std::all_of(col.begin(), col.end(), [](const Rat &r) { return is_integer(r); });
    if (integral)
      continue;
    out.push_back(TorsionPoint::from_rationals(wq.apply(col)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TranslationWitness solve_translation_witness(const Scenario &s, const TorsionPoint &t) {
  LinearElement tau = element_without_eigenvalue_one(s.group);
  auto sol = solve_mod_one(one_minus(tau), t.coordinates());
  if (!sol.solvable || sol.points.empty())
    throw Error("solve_translation_witness: no solution (1 - tau not surjective?)");
  return {tau, TorsionPoint::from_rationals(sol.points.front())};
}

}  // namespace avq
