#include "avq/groups/matrix_group.hpp"

#include "avq/groups/kernels.hpp"

#include <algorithm>
#include <unordered_map>

namespace avq {

namespace {

constexpr std::uint32_t kEmpty = 0xffffffffu;
// below this many elements a coset is cheaper to build on one thread
constexpr std::size_t kParallelCoset = 2048;

struct NumHash {
  std::size_t operator()(const std::vector<std::int64_t> &v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

MatZ minus_identity(const LinearElement &g) {
  MatZ m = g.to_matrix();
  for (std::size_t i = 0; i < m.rows(); ++i)
    m(i, i) -= 1;
  return m;
}

}  // namespace

ElementSet::ElementSet(std::size_t) : slots_(16, kEmpty), mask_(15) {}

std::size_t ElementSet::find_slot(const LinearElement &e) const {
  std::size_t i = e.hash() & mask_;
  while (slots_[i] != kEmpty && !(elems_[slots_[i]] == e))
    i = (i + 1) & mask_;
  return i;
}

bool ElementSet::contains(const LinearElement &e) const { return slots_[find_slot(e)] != kEmpty; }

void ElementSet::grow() {
  const std::size_t n = slots_.size() * 2;
  slots_.assign(n, kEmpty);
  mask_ = n - 1;
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    std::size_t i = elems_[k].hash() & mask_;
    while (slots_[i] != kEmpty)
      i = (i + 1) & mask_;
    slots_[i] = static_cast<std::uint32_t>(k);
  }
}

bool ElementSet::insert(LinearElement e) {
  std::size_t i = find_slot(e);
  if (slots_[i] != kEmpty)
    return false;
  if (elems_.size() >= 0xfffffff0u)
    throw CapExceeded("element set is full");
  slots_[i] = static_cast<std::uint32_t>(elems_.size());
  elems_.push_back(std::move(e));
  if (2 * elems_.size() > slots_.size())
    grow();
  return true;
}

SubgroupBuilder::SubgroupBuilder(std::size_t dim, std::size_t cap) : dim_(dim), cap_(cap), set_(dim) {
  set_.insert(LinearElement(dim));
}

void SubgroupBuilder::append_coset(std::size_t h_size, const LinearElement &rep) {
  if (set_.size() + h_size > cap_)
    throw CapExceeded("group closure exceeds cap " + std::to_string(cap_));
  std::span<const LinearElement> h(set_.elements().data(), h_size);
  if (h_size >= kParallelCoset && kernels::parallel_enabled())
    kernels::multiply_all_parallel(h, rep, scratch_);
  else
    kernels::multiply_all_serial(h, rep, scratch_);
  for (auto &e : scratch_)
    set_.insert(std::move(e));
}

bool SubgroupBuilder::add_generator(const LinearElement &g) {
  if (g.dim() != dim_)
    throw Error("generator dimension mismatch");
  if (set_.contains(g))
    return false;
  const std::size_t h_size = set_.size();
  gens_.push_back(g);
  append_coset(h_size, g);
  for (std::size_t pos = h_size; pos < set_.size(); pos += h_size) {
    const LinearElement rep = set_[pos];
    for (const auto &s : gens_) {
      LinearElement e = rep * s;
      if (!set_.contains(e))
        append_coset(h_size, e);
    }
  }
  return true;
}

std::vector<LinearElement> SubgroupBuilder::take_sorted() {
  auto v = set_.release();
  std::sort(v.begin(), v.end());
  set_ = ElementSet(dim_);
  return v;
}

FiniteMatrixGroup::FiniteMatrixGroup(std::size_t dim, std::vector<LinearElement> generators,
                                     std::string name)
    : dim_(dim), name_(std::move(name)), gens_(std::move(generators)) {
  for (const auto &g : gens_)
    if (g.dim() != dim_)
      throw ValidationError("generator dimension mismatch in " + name_);
}

FiniteMatrixGroup FiniteMatrixGroup::from_closed(std::size_t dim, std::vector<LinearElement> sorted_elements,
                                                 std::vector<LinearElement> generators, std::string name) {
  FiniteMatrixGroup g(dim, std::move(generators), std::move(name));
  g.closure_ = std::make_shared<const std::vector<LinearElement>>(std::move(sorted_elements));
  return g;
}

const std::vector<LinearElement> &FiniteMatrixGroup::elements(std::size_t cap) const {
  if (!closure_) {
    SubgroupBuilder b(dim_, cap);
    for (const auto &g : gens_)
      b.add_generator(g);
    auto v = b.take_sorted();
    if (declared_ && *declared_ != v.size())
      throw ValidationError("group " + name_ + ": closure has order " + std::to_string(v.size()) +
                            ", expected " + std::to_string(*declared_));
    closure_ = std::make_shared<const std::vector<LinearElement>>(std::move(v));
  }
  return *closure_;
}

bool FiniteMatrixGroup::contains(const LinearElement &e) const {
  const auto &v = elements();
  return std::binary_search(v.begin(), v.end(), e);
}

void FiniteMatrixGroup::validate() const {
  for (const auto &g : gens_)
    if (!g.is_unimodular())
      throw ValidationError("generator of " + name_ + " is not invertible over Z");
}

OrbitStabilizerResult orbit_stabilizer(const FiniteMatrixGroup &g, const TorsionPoint &x, std::size_t cap) {
  if (x.dim() != g.dim())
    throw Error("orbit_stabilizer: point dimension mismatch");
  const std::int64_t den = x.denominator();
  const auto &gens = g.generators();
  std::vector<LinearElement> gen_inv;
  for (const auto &s : gens)
    gen_inv.push_back(s.inverse());

  std::unordered_map<std::vector<std::int64_t>, std::uint32_t, NumHash> index;
  std::vector<std::vector<std::int64_t>> pts{x.numerators()};
  std::vector<LinearElement> u{LinearElement(g.dim())}, uinv{LinearElement(g.dim())};
  std::vector<std::uint32_t> edge;  // edge[i * |gens| + s] = index of s * pts[i]
  index.emplace(x.numerators(), 0);
  std::vector<std::int64_t> y(g.dim());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      gens[s].act_mod(pts[i].data(), y.data(), den);
      auto [it, fresh] = index.emplace(y, static_cast<std::uint32_t>(pts.size()));
      if (fresh) {
        if (pts.size() >= kDefaultClosureCap)
          throw CapExceeded("orbit exceeds cap");
        pts.push_back(y);
        u.push_back(gens[s] * u[i]);
        uinv.push_back(uinv[i] * gen_inv[s]);
      }
      edge.push_back(it->second);
    }
  }

  std::optional<std::uint64_t> known;
  if (g.is_closed())
    known = g.elements().size();
  else if (g.declared_order())
    known = g.declared_order();

  OrbitStabilizerResult r;
  SubgroupBuilder b(g.dim(), cap);
  const std::uint64_t orbit_size = pts.size();
  auto done = [&] { return known && orbit_size * b.size() == *known; };
  for (std::size_t i = 0; i < pts.size() && !done(); ++i)
    for (std::size_t s = 0; s < gens.size() && !done(); ++s) {
      const std::uint32_t j = edge[i * gens.size() + s];
      LinearElement sg = uinv[j] * gens[s] * u[i];
      if (b.add_generator(sg))
        r.generators.push_back(std::move(sg));
    }
  r.group_order = orbit_size * b.size();
  if (known && r.group_order != *known)
    throw ValidationError("orbit-stabilizer mismatch: |orbit| * |stab| = " + std::to_string(r.group_order) +
                          " but |G| = " + std::to_string(*known));
  r.stabilizer = b.take_sorted();
  r.orbit.reserve(pts.size());
  for (auto &p : pts)
    r.orbit.push_back(TorsionPoint::from_numerators(den, std::move(p)));
  return r;
}

std::vector<LinearElement> stabilizer_brute_force(const FiniteMatrixGroup &g, const TorsionPoint &x) {
  const auto &els = g.elements();
  auto hits = kernels::parallel_enabled()
                  ? kernels::scan_stabilizer_parallel(els, x.numerators(), x.denominator())
                  : kernels::scan_stabilizer_serial(els, x.numerators(), x.denominator());
  std::vector<LinearElement> out;
  out.reserve(hits.size());
  for (auto i : hits)
    out.push_back(els[i]);
  return out;
}

ReflectionReport is_pseudoreflection(const LinearElement &g) {
  ReflectionReport r;
  if (g.fixed_codim() != 2)
    return r;
  r.is_reflection = true;
  r.order = g.order();
  r.root_lattice = saturate(LatticeBasis::from_generators(minus_identity(g)));
  return r;
}

std::vector<LinearElement> pseudoreflections(const std::vector<LinearElement> &elements) {
  auto hits = kernels::parallel_enabled() ? kernels::scan_fixed_codim_parallel(elements, 2)
                                          : kernels::scan_fixed_codim_serial(elements, 2);
  std::vector<LinearElement> out;
  for (auto i : hits)
    out.push_back(elements[i]);
  std::sort(out.begin(), out.end());
  return out;
}

FiniteMatrixGroup reflection_subgroup(const std::vector<LinearElement> &elements, std::size_t dim) {
  SubgroupBuilder b(dim);
  for (const auto &s : pseudoreflections(elements))
    b.add_generator(s);
  auto gens = b.generators();
  return FiniteMatrixGroup::from_closed(dim, b.take_sorted(), std::move(gens), "reflections");
}

LinearElement element_without_eigenvalue_one(const FiniteMatrixGroup &g) {
  const auto &els = g.elements();
  auto hits = kernels::parallel_enabled() ? kernels::scan_fixed_codim_parallel(els, g.dim())
                                          : kernels::scan_fixed_codim_serial(els, g.dim());
  if (hits.empty())
    throw ValidationError("every element of " + (g.name().empty() ? std::string("the group") : g.name()) +
                          " has eigenvalue 1");
  return els[hits.front()];
}

TorsionPoint AffineElement::act(const TorsionPoint &x) const { return linear.act(x) + translation; }

AffineElement operator*(const AffineElement &a, const AffineElement &b) {
  return {a.linear * b.linear, a.linear.act(b.translation) + a.translation};
}

MatZ subtorus_equations(const MatZ &image_generators) {
  return integer_kernel(image_generators.transpose()).transpose();
}

bool is_affine_pseudoreflection(const AffineElement &a) {
  if (a.linear.fixed_codim() != 2)
    return false;
  MatZ y = subtorus_equations(minus_identity(a.linear));
  VecQ t = a.translation.coordinates();
  for (std::size_t i = 0; i < y.rows(); ++i) {
    Rat acc = 0;
    for (std::size_t j = 0; j < y.cols(); ++j)
      acc += Rat(y(i, j)) * t[j];
    if (!is_integer(acc))
      return false;
  }
  return true;
}

ModOneSolution affine_fixed_points(const AffineElement &a, std::size_t enumerate_cap) {
  MatZ m = -minus_identity(a.linear);
  VecQ t = a.translation.coordinates();
  return solve_mod_one(m, t, enumerate_cap);
}

}  // namespace avq
