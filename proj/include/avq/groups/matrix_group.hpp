#pragma once

#include "avq/exact/lattice.hpp"
#include "avq/groups/element.hpp"

#include <memory>
#include <optional>
#include <string>

namespace avq {

inline constexpr std::size_t kDefaultClosureCap = 10'000'000;
inline constexpr std::size_t kDefaultStabilizerCap = 1'000'000;

/// Growable set of group elements with an open-addressing index; keeps
/// insertion order.
class ElementSet {
public:
  explicit ElementSet(std::size_t dim = 0);

  std::size_t size() const { return elems_.size(); }
  const LinearElement &operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<LinearElement> &elements() const { return elems_; }
  bool contains(const LinearElement &e) const;
  /// Returns false if already present.
  bool insert(LinearElement e);
  std::vector<LinearElement> release() { return std::move(elems_); }

private:
  std::size_t find_slot(const LinearElement &e) const;
  void grow();

  std::vector<LinearElement> elems_;
  std::vector<std::uint32_t> slots_;
  std::size_t mask_ = 0;
};

/// Incremental closure by Dimino's algorithm. Elements are laid out as
/// right cosets of the previous subgroup, so adding a generator only ever
/// multiplies coset representatives.
class SubgroupBuilder {
public:
  SubgroupBuilder(std::size_t dim, std::size_t cap = kDefaultClosureCap);

  std::size_t size() const { return set_.size(); }
  bool contains(const LinearElement &e) const { return set_.contains(e); }
  /// Extends the group by g; returns false (and does nothing) when g is
  /// already an element. Throws CapExceeded past the cap.
  bool add_generator(const LinearElement &g);
  const std::vector<LinearElement> &generators() const { return gens_; }
  const std::vector<LinearElement> &elements() const { return set_.elements(); }
  /// Sorted element list; leaves the builder empty.
  std::vector<LinearElement> take_sorted();

private:
  void append_coset(std::size_t h_size, const LinearElement &rep);

  std::size_t dim_;
  std::size_t cap_;
  ElementSet set_;
  std::vector<LinearElement> gens_;
  std::vector<LinearElement> scratch_;
};

/// Finite group of integer matrices given by generators. The full element
/// list is computed on first use and cached; copies share the cache.
class FiniteMatrixGroup {
public:
  FiniteMatrixGroup() = default;
  FiniteMatrixGroup(std::size_t dim, std::vector<LinearElement> generators, std::string name = {});
  /// Wraps an already closed, sorted element list.
  static FiniteMatrixGroup from_closed(std::size_t dim, std::vector<LinearElement> sorted_elements,
                                       std::vector<LinearElement> generators, std::string name = {});

  std::size_t dim() const { return dim_; }
  const std::string &name() const { return name_; }
  const std::vector<LinearElement> &generators() const { return gens_; }

  /// Order known from the construction (e.g. a classification table). Used
  /// to verify computed orders, never to skip work.
  std::optional<std::uint64_t> declared_order() const { return declared_; }
  void set_declared_order(std::uint64_t n) { declared_ = n; }

  bool is_closed() const { return closure_ != nullptr; }
  /// Sorted elements; closes the group on first call.
  const std::vector<LinearElement> &elements(std::size_t cap = kDefaultClosureCap) const;
  std::size_t order(std::size_t cap = kDefaultClosureCap) const { return elements(cap).size(); }
  bool contains(const LinearElement &e) const;

  /// Throws ValidationError if a generator is not invertible over Z.
  void validate() const;

private:
  std::size_t dim_ = 0;
  std::string name_;
  std::vector<LinearElement> gens_;
  std::optional<std::uint64_t> declared_;
  mutable std::shared_ptr<const std::vector<LinearElement>> closure_;
};

struct OrbitStabilizerResult {
  /// Orbit in discovery order; orbit[0] is the input point.
  std::vector<TorsionPoint> orbit;
  /// Fully closed stabilizer, sorted.
  std::vector<LinearElement> stabilizer;
  /// Schreier generators that were not redundant when added.
  std::vector<LinearElement> generators;
  /// |orbit| * |stabilizer|
  std::uint64_t group_order = 0;
};

/// Stabilizer of a torsion point through the orbit and Schreier generators.
/// The product |orbit| * |stabilizer| is checked against the group order
/// whenever that order is known (closed or declared).
OrbitStabilizerResult orbit_stabilizer(const FiniteMatrixGroup &g, const TorsionPoint &x,
                                       std::size_t cap = kDefaultStabilizerCap);

/// Reference: scans every element of the closure.
std::vector<LinearElement> stabilizer_brute_force(const FiniteMatrixGroup &g, const TorsionPoint &x);

struct ReflectionReport {
  bool is_reflection = false;
  unsigned order = 1;
  /// Saturated image of (g - I): the root line as a rank 2 lattice.
  LatticeBasis root_lattice;
};

/// rank_Q(g - I) == 2 in the realified coordinates.
ReflectionReport is_pseudoreflection(const LinearElement &g);

/// Pseudoreflections among `elements`, sorted.
std::vector<LinearElement> pseudoreflections(const std::vector<LinearElement> &elements);

/// Subgroup generated by the pseudoreflections contained in `elements`.
FiniteMatrixGroup reflection_subgroup(const std::vector<LinearElement> &elements, std::size_t dim);

/// An element of the closure with no eigenvalue 1; throws ValidationError
/// when none exists (e.g. for the trivial group).
LinearElement element_without_eigenvalue_one(const FiniteMatrixGroup &g);

/// x -> linear * x + translation on R^d / Z^d.
struct AffineElement {
  LinearElement linear;
  TorsionPoint translation;

  TorsionPoint act(const TorsionPoint &x) const;
  friend AffineElement operator*(const AffineElement &a, const AffineElement &b);
  friend bool operator==(const AffineElement &, const AffineElement &) = default;
};

/// The linear part is a pseudoreflection and the translation lies in the
/// subtorus image(1 - linear).
bool is_affine_pseudoreflection(const AffineElement &a);

/// Fixed points of an affine map: solutions of (1 - g) x == t mod Z^d.
ModOneSolution affine_fixed_points(const AffineElement &a, std::size_t enumerate_cap = 1'000'000);

/// Integer matrix (rows) whose kernel mod Z^d is the saturated image of m:
/// y . v == 0 mod 1 for every row y exactly when v lies on that subtorus.
MatZ subtorus_equations(const MatZ &image_generators);

}  // namespace avq
