#pragma once

#include <utility>
#include <vector>

#include "specialred/glattice.hpp"
#include "specialred/report.hpp"

namespace specialred {

/// A torus split by a finite Galois extension, given by its character lattice
/// over the Galois group of that extension.
struct TorusDescriptor {
  GLattice character_lattice;

  const FiniteGroup& galois() const { return character_lattice.group(); }
  std::size_t rank() const { return character_lattice.rank(); }

  static TorusDescriptor split(std::size_t rank) {
    return {GLattice::trivial(FiniteGroup::trivial(), rank)};
  }

  friend bool operator==(const TorusDescriptor&,
                         const TorusDescriptor&) = default;
};

/// Special iff the character lattice is invertible.
ClassificationReport is_special_torus(const TorusDescriptor& t);

/// H^1(H, N) for every subgroup H, N the cocharacter lattice.
std::vector<std::pair<Subgroup, AbelianInvariants>> cocharacter_h1_profile(
    const TorusDescriptor& t);

}  // namespace specialred
