#pragma once

// Finite permutation groups standing in for a Galois group acting through a
// finite quotient.
//
// Composition convention: (g * h)(i) = h(g(i)), i.e. apply g first. This is a
// right action, which is what the row-vector lattice action needs.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace specialred {

using Permutation = std::vector<std::uint32_t>;

struct Limits {
  std::size_t max_group_order = 64;
  std::size_t max_rank = 12;
};

class FiniteGroup {
 public:
  /// Closure of the generators, enumerated breadth-first (identity first,
  /// then by applying generators in order). Throws OrderCapExceeded or
  /// InvalidAction.
  static FiniteGroup from_generators(std::size_t degree,
                                     std::vector<Permutation> generators,
                                     const Limits& limits = {});
  /// Cyclic group of order n acting regularly on n points.
  static FiniteGroup cyclic(std::size_t n, const Limits& limits = {});
  static FiniteGroup symmetric(std::size_t n, const Limits& limits = {});
  /// Dihedral group of order 2n acting on the n-gon (n >= 3), or the Klein
  /// four group realized on 4 points for n = 2.
  static FiniteGroup dihedral(std::size_t n, const Limits& limits = {});
  static FiniteGroup trivial();

  std::size_t degree() const { return impl_->degree; }
  std::size_t order() const { return impl_->elements.size(); }
  const std::vector<Permutation>& generators() const {
    return impl_->generators;
  }
  const Permutation& element(std::size_t i) const {
    return impl_->elements[i];
  }
  const std::vector<Permutation>& elements() const { return impl_->elements; }

  static constexpr std::size_t identity_index = 0;
  std::size_t multiply(std::size_t a, std::size_t b) const {
    return impl_->table[a * order() + b];
  }
  std::size_t inverse(std::size_t a) const { return impl_->inverses[a]; }
  /// Index of the element equal to generator `g`.
  std::size_t generator_element(std::size_t g) const {
    return impl_->generator_elements[g];
  }
  /// Breadth-first tree: element i = parent(i) * generators()[via(i)].
  std::size_t parent(std::size_t i) const { return impl_->parent[i]; }
  std::size_t via(std::size_t i) const { return impl_->via[i]; }

  /// Index of a permutation in the element list, or order() when absent.
  std::size_t index_of(const Permutation& p) const;

  /// Same degree, same generator list. Element lists then agree too.
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.impl_ == b.impl_ || (a.degree() == b.degree() &&
                                  a.generators() == b.generators());
  }

 private:
  struct Impl {
    std::size_t degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;
    std::vector<std::size_t> table;
    std::vector<std::size_t> inverses;
    std::vector<std::size_t> generator_elements;
    std::vector<std::size_t> parent;
    std::vector<std::size_t> via;
  };
  explicit FiniteGroup(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// A subgroup, stored as the sorted indices of its elements in the parent.
class Subgroup {
 public:
  Subgroup(FiniteGroup parent, std::vector<std::size_t> elements);

  static Subgroup whole(const FiniteGroup& g);
  static Subgroup trivial(const FiniteGroup& g);
  /// Subgroup generated by the given element indices.
  static Subgroup generated_by(const FiniteGroup& g,
                               const std::vector<std::size_t>& generators);

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<std::size_t>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(std::size_t element) const;
  bool is_trivial() const { return elements_.size() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  FiniteGroup parent_;
  std::vector<std::size_t> elements_;
};

/// Every subgroup exactly once, sorted by order and then lexicographically by
/// element indices.
std::vector<Subgroup> subgroups(const FiniteGroup& g);

/// Right cosets Hx, numbered in order of first appearance while scanning the
/// element list; coset 0 is H itself.
struct CosetTable {
  std::vector<std::size_t> representative;  // element index per coset
  std::vector<std::size_t> coset_of;        // coset index per element
};

CosetTable right_cosets(const Subgroup& h);

}  // namespace specialred
