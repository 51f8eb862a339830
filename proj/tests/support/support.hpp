#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "specialred/glattice.hpp"
#include "specialred/groups.hpp"
#include "specialred/reductive.hpp"

namespace support {

using namespace specialred;

/// Directory holding the descriptor fixtures (set at build time).
std::filesystem::path fixture_dir();
std::string read_text(const std::filesystem::path& p);

struct Fixture {
  std::string name;
  std::string text;
  GroupDescriptor descriptor;
};
/// Every *.json descriptor in fixture_dir(), sorted by name.
std::vector<Fixture> load_fixtures();
/// fixture name -> "Special" | "NotSpecial" | "Undecided".
std::map<std::string, std::string> expected_verdicts();

FiniteGroup alternating4();

/// The `nth` subgroup of the given order, in subgroups() order.
Subgroup subgroup_of_order(const FiniteGroup& g, std::size_t order,
                           std::size_t nth = 0);

/// C2 acting on Z by -1.
GLattice sign_lattice();
/// C2 acting on Z^2 by diag(-1, 1).
GLattice sign_plus_trivial();
/// The sublattice spanned by the rows of `basis` (must be invariant).
GLattice restrict_to(const GLattice& m, const IntMatrix& basis);
/// Kernel of the augmentation Z[G/H] -> Z.
GLattice augmentation_kernel(const FiniteGroup& g, const Subgroup& h);

struct NamedLattice {
  std::string name;
  GLattice lattice;
  bool permutation = false;
};
/// Lattices over groups of order at most 12.
std::vector<NamedLattice> lattice_library();

}  // namespace support
