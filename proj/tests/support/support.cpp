#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "specialred/descriptor_io.hpp"

#ifndef SPECIALRED_FIXTURE_DIR
#error "SPECIALRED_FIXTURE_DIR must be defined"
#endif

namespace support {

std::filesystem::path fixture_dir() { return SPECIALRED_FIXTURE_DIR; }

std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Fixture> load_fixtures() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(fixture_dir()))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Fixture> out;
  for (const auto& f : files) {
    std::string text = read_text(f);
    out.push_back({f.stem().string(), text, io::parse_descriptor(text)});
  }
  return out;
}

std::map<std::string, std::string> expected_verdicts() {
  std::istringstream in(read_text(fixture_dir() / "expected_verdicts.txt"));
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string name, verdict;
    fields >> name >> verdict;
    out[name] = verdict;
  }
  return out;
}

FiniteGroup alternating4() {
  return FiniteGroup::from_generators(4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
}

Subgroup subgroup_of_order(const FiniteGroup& g, std::size_t order,
                           std::size_t nth) {
  for (const auto& h : subgroups(g))
    if (h.order() == order && nth-- == 0) return h;
  throw std::invalid_argument("no such subgroup");
}

GLattice sign_lattice() {
  return GLattice::from_generator_action(FiniteGroup::cyclic(2), 1,
                                         {IntMatrix{{-1}}});
}

GLattice sign_plus_trivial() {
  return GLattice::from_generator_action(FiniteGroup::cyclic(2), 2,
                                         {IntMatrix{{-1, 0}, {0, 1}}});
}

GLattice restrict_to(const GLattice& m, const IntMatrix& basis) {
  std::vector<IntMatrix> gens;
  for (const auto& a : m.generator_action()) {
    IntMatrix image = basis * a;
    IntMatrix coords(basis.rows(), basis.rows());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      auto c = solve_row_combination(basis, image.row_vector(i));
      if (!c) throw std::invalid_argument("basis does not span an invariant "
                                          "sublattice");
      for (std::size_t j = 0; j < basis.rows(); ++j) coords(i, j) = (*c)[j];
    }
    gens.push_back(std::move(coords));
  }
  return GLattice::from_generator_action(m.group(), basis.rows(),
                                         std::move(gens));
}

GLattice augmentation_kernel(const FiniteGroup& g, const Subgroup& h) {
  GLattice p = permutation_lattice(g, h);
  IntMatrix ones(p.rank(), 1);
  for (std::size_t i = 0; i < p.rank(); ++i) ones(i, 0) = 1;
  return restrict_to(p, kernel_basis(ones));
}

std::vector<NamedLattice> lattice_library() {
  const FiniteGroup c1 = FiniteGroup::trivial();
  const FiniteGroup c2 = FiniteGroup::cyclic(2);
  const FiniteGroup c3 = FiniteGroup::cyclic(3);
  const FiniteGroup c4 = FiniteGroup::cyclic(4);
  const FiniteGroup c6 = FiniteGroup::cyclic(6);
  const FiniteGroup v4 = FiniteGroup::dihedral(2);
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const FiniteGroup d4 = FiniteGroup::dihedral(4);
  const FiniteGroup a4 = alternating4();
  const FiniteGroup d6 = FiniteGroup::dihedral(6);

  auto perm = [](const FiniteGroup& g, const Subgroup& h) {
    return permutation_lattice(g, h);
  };
  auto whole = [](const FiniteGroup& g) { return Subgroup::whole(g); };
  auto triv = [](const FiniteGroup& g) { return Subgroup::trivial(g); };

  std::vector<NamedLattice> lib;
  auto add = [&](std::string name, GLattice l, bool is_perm) {
    lib.push_back({std::move(name), std::move(l), is_perm});
  };
  add("split rank 2", GLattice::trivial(c1, 2), true);
  add("rank 0 over C2", GLattice::trivial(c2, 0), true);
  add("Z over C2", GLattice::trivial(c2, 1), true);
  add("sign over C2", sign_lattice(), false);
  add("Z[C2]", perm(c2, triv(c2)), true);
  add("sign + Z over C2", sign_plus_trivial(), false);
  add("Z[C2] + sign", direct_sum(perm(c2, triv(c2)), sign_lattice()), false);
  add("Z[C2] + Z[C2]", direct_sum(perm(c2, triv(c2)), perm(c2, triv(c2))),
      true);
  add("sign + sign", direct_sum(sign_lattice(), sign_lattice()), false);
  add("Z[C3]", perm(c3, triv(c3)), true);
  add("J_C3", augmentation_kernel(c3, triv(c3)), false);
  add("dual J_C3", dual(augmentation_kernel(c3, triv(c3))), false);
  add("Z[C4]", perm(c4, triv(c4)), true);
  add("Z[C4/C2]", perm(c4, subgroup_of_order(c4, 2)), true);
  add("Z[i] over C4",
      GLattice::from_generator_action(c4, 2, {IntMatrix{{0, -1}, {1, 0}}}),
      false);
  add("Z[C6/C3] + Z[C6/C2]",
      direct_sum(perm(c6, subgroup_of_order(c6, 3)),
                 perm(c6, subgroup_of_order(c6, 2))),
      true);
  add("Z[V4]", perm(v4, triv(v4)), true);
  add("Z[V4/H]", perm(v4, subgroup_of_order(v4, 2, 1)), true);
  add("J_V4", augmentation_kernel(v4, triv(v4)), false);
  add("Z[S3/C2]", perm(s3, subgroup_of_order(s3, 2)), true);
  add("Z[S3/C3]", perm(s3, subgroup_of_order(s3, 3)), true);
  add("J_{S3/C2}", augmentation_kernel(s3, subgroup_of_order(s3, 2)), false);
  add("Z[S3]", perm(s3, triv(s3)), true);
  add("Z[D4/reflection]", perm(d4, subgroup_of_order(d4, 2, 1)), true);
  add("Z[A4/C3]", perm(a4, subgroup_of_order(a4, 3)), true);
  add("Z[A4/V4]", perm(a4, subgroup_of_order(a4, 4)), true);
  add("Z[D6/S3]", perm(d6, subgroup_of_order(d6, 6)), true);
  add("Z over D6", perm(d6, whole(d6)), true);
  return lib;
}

}  // namespace support
