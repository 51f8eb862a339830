#include "specialred/glattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "specialred/errors.hpp"

namespace specialred {

GLattice::GLattice(FiniteGroup group, std::size_t rank,
                   std::vector<IntMatrix> generator_action)
    : group_(std::move(group)),
      rank_(rank),
      generator_action_(std::move(generator_action)) {
  if (generator_action_.size() != group_.generators().size())
    throw InvalidAction("expected " +
                        std::to_string(group_.generators().size()) +
                        " action matrices (one per generator), got " +
                        std::to_string(generator_action_.size()));
  for (std::size_t g = 0; g < generator_action_.size(); ++g) {
    const auto& a = generator_action_[g];
    if (a.rows() != rank_ || a.cols() != rank_)
      throw InvalidAction("action matrix " + std::to_string(g) +
                          " is not " + std::to_string(rank_) + "x" +
                          std::to_string(rank_));
  }
  const std::size_t n = group_.order();
  element_action_.resize(n);
  element_action_[FiniteGroup::identity_index] = IntMatrix::identity(rank_);
  for (std::size_t e = 1; e < n; ++e)
    element_action_[e] = element_action_[group_.parent(e)] *
                         generator_action_[group_.via(e)];
  // The breadth-first tree fixes each element's matrix along one word; the
  // relations e * g are what make the assignment a homomorphism.
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t g = 0; g < generator_action_.size(); ++g) {
      std::size_t eg = group_.multiply(e, group_.generator_element(g));
      if (!(element_action_[e] * generator_action_[g] == element_action_[eg]))
        throw InvalidAction(
            "action matrices do not define a homomorphism (relation at "
            "element " + std::to_string(e) + ", generator " +
            std::to_string(g) + ")");
    }
  }
}

GLattice GLattice::from_generator_action(
    FiniteGroup group, std::size_t rank,
    std::vector<IntMatrix> generator_action, const Limits& limits) {
  if (rank > limits.max_rank)
    throw RankCapExceeded("lattice rank " + std::to_string(rank) +
                          " exceeds cap " + std::to_string(limits.max_rank));
  for (std::size_t g = 0; g < generator_action.size(); ++g) {
    const auto& a = generator_action[g];
    if (a.rows() == rank && a.cols() == rank && !is_unimodular(a))
      throw InvalidAction("action matrix " + std::to_string(g) +
                          " is not unimodular");
  }
  return GLattice(std::move(group), rank, std::move(generator_action));
}

GLattice GLattice::from_basis_permutations(
    FiniteGroup group, std::size_t rank,
    const std::vector<std::vector<std::size_t>>& basis_images) {
  std::vector<IntMatrix> mats;
  mats.reserve(basis_images.size());
  for (const auto& images : basis_images) {
    if (images.size() != rank)
      throw InvalidAction("basis permutation has wrong length");
    IntMatrix p(rank, rank);
    std::vector<bool> hit(rank, false);
    for (std::size_t i = 0; i < rank; ++i) {
      if (images[i] >= rank || hit[images[i]])
        throw InvalidAction("basis images do not form a permutation");
      hit[images[i]] = true;
      p(i, images[i]) = 1;
    }
    mats.push_back(std::move(p));
  }
  return GLattice(std::move(group), rank, std::move(mats));
}

GLattice GLattice::trivial(FiniteGroup group, std::size_t rank) {
  std::vector<IntMatrix> mats(group.generators().size(),
                              IntMatrix::identity(rank));
  return GLattice(std::move(group), rank, std::move(mats));
}

GLattice GLattice::change_basis(const IntMatrix& basis,
                                const IntMatrix& basis_inverse) const {
  if (basis.rows() != rank_ || basis.cols() != rank_ ||
      !(basis * basis_inverse == IntMatrix::identity(rank_)))
    throw InvalidAction("change of basis needs a unimodular matrix and its "
                        "inverse");
  std::vector<IntMatrix> mats;
  for (const auto& a : generator_action_)
    mats.push_back(basis * a * basis_inverse);
  return GLattice(group_, rank_, std::move(mats));
}

std::string AbelianInvariants::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < free_rank; ++i) {
    os << (first ? "" : " + ") << "Z";
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

AbelianInvariants abelian_invariants_from_factors(
    const std::vector<Integer>& diagonal, std::size_t generators) {
  AbelianInvariants out;
  std::size_t nonzero = 0;
  for (const auto& d : diagonal) {
    if (sgn(d) == 0) continue;
    ++nonzero;
    Integer a = abs(d);
    out.torsion.push_back(a);
  }
  // (x, y) -> (gcd, lcm) over all pairs leaves a divisibility chain.
  auto& t = out.torsion;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      Integer g = gcd(t[i], t[j]);
      t[j] = t[i] / g * t[j];
      t[i] = g;
    }
  t.erase(std::remove(t.begin(), t.end(), Integer(1)), t.end());
  out.free_rank = generators - nonzero;
  return out;
}

GLattice permutation_lattice(const FiniteGroup& g, const Subgroup& h) {
  if (!(h.parent() == g))
    throw GroupMismatch("subgroup belongs to a different group");
  CosetTable cosets = right_cosets(h);
  const std::size_t index = cosets.representative.size();
  std::vector<std::vector<std::size_t>> images;
  for (std::size_t gi = 0; gi < g.generators().size(); ++gi) {
    std::vector<std::size_t> im(index);
    for (std::size_t c = 0; c < index; ++c)
      im[c] = cosets.coset_of[g.multiply(cosets.representative[c],
                                         g.generator_element(gi))];
    images.push_back(std::move(im));
  }
  return GLattice::from_basis_permutations(g, index, images);
}

GLattice dual(const GLattice& m) {
  const FiniteGroup& g = m.group();
  std::vector<IntMatrix> mats;
  for (std::size_t gi = 0; gi < g.generators().size(); ++gi)
    mats.push_back(m.action(g.inverse(g.generator_element(gi))).transpose());
  return GLattice::from_generator_action(g, m.rank(), std::move(mats),
                                         Limits{g.order(), m.rank()});
}

GLattice direct_sum(const GLattice& a, const GLattice& b) {
  if (!(a.group() == b.group()))
    throw GroupMismatch("direct sum of lattices over different groups");
  const std::size_t ra = a.rank(), rb = b.rank();
  std::vector<IntMatrix> mats;
  for (std::size_t gi = 0; gi < a.group().generators().size(); ++gi) {
    IntMatrix s(ra + rb, ra + rb);
    const IntMatrix& x = a.generator_action()[gi];
    const IntMatrix& y = b.generator_action()[gi];
    for (std::size_t i = 0; i < ra; ++i)
      for (std::size_t j = 0; j < ra; ++j) s(i, j) = x(i, j);
    for (std::size_t i = 0; i < rb; ++i)
      for (std::size_t j = 0; j < rb; ++j) s(ra + i, ra + j) = y(i, j);
    mats.push_back(std::move(s));
  }
  return GLattice::from_generator_action(a.group(), ra + rb, std::move(mats),
                                         Limits{a.group().order(), ra + rb});
}

namespace {

void require_subgroup_of(const Subgroup& h, const GLattice& m) {
  if (!(h.parent() == m.group()))
    throw GroupMismatch("subgroup does not belong to the lattice's group");
}

}  // namespace

IntMatrix fixed_sublattice(const Subgroup& h, const GLattice& m) {
  require_subgroup_of(h, m);
  const std::size_t r = m.rank();
  const IntMatrix id = IntMatrix::identity(r);
  IntMatrix stacked(r, 0);
  for (auto e : h.elements()) {
    if (e == FiniteGroup::identity_index) continue;
    stacked = stacked.hstack(m.action(e) - id);
  }
  return kernel_basis(stacked);
}

AbelianInvariants h1(const Subgroup& h, const GLattice& m) {
  require_subgroup_of(h, m);
  const FiniteGroup& g = m.group();
  const std::size_t r = m.rank();
  std::vector<std::size_t> nontrivial;
  for (auto e : h.elements())
    if (e != FiniteGroup::identity_index) nontrivial.push_back(e);
  const std::size_t k = nontrivial.size();
  if (k == 0 || r == 0) return {};

  auto block = [&](std::size_t element) -> std::ptrdiff_t {
    auto it = std::lower_bound(nontrivial.begin(), nontrivial.end(), element);
    if (it == nontrivial.end() || *it != element) return -1;
    return it - nontrivial.begin();
  };

  // Unknowns: c_x for x != e, each a row vector of length r. Constraint for
  // the ordered pair (x, y): c_x * A(y) + c_y - c_{xy} = 0.
  const std::size_t unknowns = k * r;
  IntMatrix constraints(unknowns, k * k * r);
  std::size_t col = 0;
  for (std::size_t xi = 0; xi < k; ++xi) {
    for (std::size_t yi = 0; yi < k; ++yi, col += r) {
      const std::size_t x = nontrivial[xi], y = nontrivial[yi];
      const IntMatrix& ay = m.action(y);
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
          constraints(xi * r + a, col + b) += ay(a, b);
      for (std::size_t a = 0; a < r; ++a) constraints(yi * r + a, col + a) += 1;
      std::ptrdiff_t xy = block(g.multiply(x, y));
      if (xy >= 0)
        for (std::size_t a = 0; a < r; ++a)
          constraints(static_cast<std::size_t>(xy) * r + a, col + a) -= 1;
    }
  }
  const IntMatrix cocycles = kernel_basis(constraints);

  // Coboundaries of the basis vectors: x -> e_a * A(x) - e_a.
  IntMatrix coboundary_coords(r, cocycles.rows());
  for (std::size_t a = 0; a < r; ++a) {
    IntVector v(unknowns);
    for (std::size_t xi = 0; xi < k; ++xi) {
      const IntMatrix& ax = m.action(nontrivial[xi]);
      for (std::size_t b = 0; b < r; ++b)
        v[xi * r + b] = ax(a, b) - (a == b ? 1 : 0);
    }
    auto coords = solve_row_combination(cocycles, v);
    if (!coords)
      throw std::logic_error("h1: coboundary outside the cocycle lattice");
    std::copy(coords->begin(), coords->end(),
              coboundary_coords.row(a).begin());
  }
  AbelianInvariants out = abelian_invariants_from_factors(
      invariant_factors(coboundary_coords), cocycles.rows());
  if (out.free_rank != 0)
    throw std::logic_error("h1: nonzero free rank for a finite group");
  return out;
}

PredicateResult is_coflasque(const GLattice& m) {
  if (m.rank() == 0) return {true, std::nullopt};
  for (const auto& h : subgroups(m.group())) {
    AbelianInvariants inv = h1(h, m);
    if (!inv.is_trivial())
      return {false, CohomologyObstruction{h, std::move(inv)}};
  }
  return {true, std::nullopt};
}

PredicateResult is_flasque(const GLattice& m) { return is_coflasque(dual(m)); }

PermutationCover coflasque_cover(const GLattice& m) {
  const FiniteGroup& g = m.group();
  const std::size_t r = m.rank();
  std::vector<std::vector<std::size_t>> images(g.generators().size());
  std::vector<IntVector> projection_rows;
  std::vector<std::pair<Subgroup, std::size_t>> tags;
  if (r > 0) {
    for (const auto& h : subgroups(g)) {
      const IntMatrix fixed = fixed_sublattice(h, m);
      if (fixed.rows() == 0) continue;
      const CosetTable cosets = right_cosets(h);
      const std::size_t index = cosets.representative.size();
      for (std::size_t f = 0; f < fixed.rows(); ++f) {
        const std::size_t offset = projection_rows.size();
        for (std::size_t c = 0; c < index; ++c)
          projection_rows.push_back(
              row_times(fixed.row(f), m.action(cosets.representative[c])));
        for (std::size_t gi = 0; gi < g.generators().size(); ++gi)
          for (std::size_t c = 0; c < index; ++c)
            images[gi].push_back(
                offset + cosets.coset_of[g.multiply(cosets.representative[c],
                                                    g.generator_element(gi))]);
      }
      tags.emplace_back(h, fixed.rows());
    }
  }
  const std::size_t cover_rank = projection_rows.size();
  return PermutationCover{
      GLattice::from_basis_permutations(g, cover_rank, images),
      IntMatrix::from_rows(projection_rows, r), std::move(tags)};
}

namespace {

bool spans_within(const IntMatrix& target, const IntMatrix& generators) {
  for (std::size_t i = 0; i < target.rows(); ++i) {
    if (generators.rows() == 0) return false;
    if (!solve_row_combination(generators, target.row(i))) return false;
  }
  return true;
}

}  // namespace

std::string verify_cover(const PermutationCover& cover, const GLattice& m) {
  const GLattice& p = cover.cover_lattice;
  if (!(p.group() == m.group())) return "cover is over a different group";
  if (cover.projection.rows() != p.rank() || cover.projection.cols() != m.rank())
    return "projection has the wrong shape";
  for (std::size_t gi = 0; gi < m.group().generators().size(); ++gi)
    if (!(p.generator_action()[gi] * cover.projection ==
          cover.projection * m.generator_action()[gi]))
      return "projection is not equivariant for generator " +
             std::to_string(gi);
  if (!spans_within(IntMatrix::identity(m.rank()), cover.projection))
    return "projection is not surjective";
  for (const auto& h : subgroups(m.group())) {
    IntMatrix image = fixed_sublattice(h, p) * cover.projection;
    if (!spans_within(fixed_sublattice(h, m), image))
      return "projection is not onto the fixed sublattice of a subgroup of "
             "order " + std::to_string(h.order());
  }
  return {};
}

InvertibilityResult is_invertible(const GLattice& m) {
  InvertibilityResult out{false, coflasque_cover(m), std::nullopt,
                          std::nullopt, {}, {}};
  const std::size_t rm = m.rank();
  const GLattice& p = out.cover.cover_lattice;
  const std::size_t rp = p.rank();
  if (rm == 0) {
    out.invertible = true;
    out.section = IntMatrix(0, rp);
    return out;
  }
  const std::size_t gens = m.group().generators().size();
  const std::size_t unknowns = rm * rp;
  auto var = [rp](std::size_t i, std::size_t j) { return i * rp + j; };
  IntMatrix system(gens * rm * rp + rm * rm, unknowns);
  IntVector rhs(system.rows());
  std::size_t row = 0;
  // Equivariance: A_M(g) * sigma - sigma * A_P(g) = 0.
  for (std::size_t gi = 0; gi < gens; ++gi) {
    const IntMatrix& am = m.generator_action()[gi];
    const IntMatrix& ap = p.generator_action()[gi];
    // A_P(g) is a permutation matrix: (sigma * A_P)_{ij} = sigma_{i, l}
    // where l is the basis vector sent to j.
    std::vector<std::size_t> preimage(rp);
    for (std::size_t l = 0; l < rp; ++l)
      for (std::size_t j = 0; j < rp; ++j)
        if (sgn(ap(l, j)) != 0) preimage[j] = l;
    for (std::size_t i = 0; i < rm; ++i) {
      for (std::size_t j = 0; j < rp; ++j, ++row) {
        for (std::size_t k = 0; k < rm; ++k)
          if (sgn(am(i, k)) != 0) system(row, var(k, j)) += am(i, k);
        system(row, var(i, preimage[j])) -= 1;
      }
    }
  }
  // Splitting: sigma * projection = identity.
  for (std::size_t i = 0; i < rm; ++i) {
    for (std::size_t j = 0; j < rm; ++j, ++row) {
      for (std::size_t l = 0; l < rp; ++l)
        if (sgn(out.cover.projection(l, j)) != 0)
          system(row, var(i, l)) += out.cover.projection(l, j);
      rhs[row] = (i == j) ? 1 : 0;
    }
  }

  LinearSolveResult solved = solve_linear_certified(system, rhs);
  if (solved.solution) {
    IntMatrix section(rm, rp);
    for (std::size_t i = 0; i < rm; ++i)
      for (std::size_t j = 0; j < rp; ++j)
        section(i, j) = (*solved.solution)[var(i, j)];
    out.invertible = true;
    out.section = std::move(section);
    return out;
  }
  out.certificate = std::move(solved.certificate);
  out.system = std::move(system);
  out.rhs = std::move(rhs);
  return out;
}

bool verify_section(const GLattice& m, const PermutationCover& cover,
                    const IntMatrix& section) {
  const GLattice& p = cover.cover_lattice;
  if (section.rows() != m.rank() || section.cols() != p.rank()) return false;
  if (!(section * cover.projection == IntMatrix::identity(m.rank())))
    return false;
  for (std::size_t gi = 0; gi < m.group().generators().size(); ++gi)
    if (!(m.generator_action()[gi] * section ==
          section * p.generator_action()[gi]))
      return false;
  return true;
}

}  // namespace specialred
