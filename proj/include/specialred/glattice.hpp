#pragma once

// Lattices with a finite group action and their cohomological predicates.
//
// Convention: lattice vectors are rows, g sends v to v * action(g), and
// action(g * h) = action(g) * action(h).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "specialred/groups.hpp"
#include "specialred/intlinalg.hpp"

namespace specialred {

class GLattice {
 public:
  /// Builds the lattice from one matrix per group generator. Verifies that
  /// every matrix is unimodular and that the generator matrices define a
  /// homomorphism on the whole group. Throws InvalidAction / RankCapExceeded.
  static GLattice from_generator_action(FiniteGroup group, std::size_t rank,
                                        std::vector<IntMatrix> generator_action,
                                        const Limits& limits = {});

  /// Lattice whose basis is permuted: generator g sends basis vector i to
  /// basis vector basis_images[g][i]. No rank cap applies.
  static GLattice from_basis_permutations(
      FiniteGroup group, std::size_t rank,
      const std::vector<std::vector<std::size_t>>& basis_images);

  /// Z^rank with every element acting as the identity.
  static GLattice trivial(FiniteGroup group, std::size_t rank);

  const FiniteGroup& group() const { return group_; }
  std::size_t rank() const { return rank_; }
  const std::vector<IntMatrix>& generator_action() const {
    return generator_action_;
  }
  const IntMatrix& action(std::size_t element) const {
    return element_action_[element];
  }

  /// The same lattice written in another basis: rows of `basis` are the new
  /// basis vectors, so the new action is basis * action * basis^-1.
  GLattice change_basis(const IntMatrix& basis,
                        const IntMatrix& basis_inverse) const;

  friend bool operator==(const GLattice& a, const GLattice& b) {
    return a.group_ == b.group_ && a.rank_ == b.rank_ &&
           a.generator_action_ == b.generator_action_;
  }

 private:
  GLattice(FiniteGroup group, std::size_t rank,
           std::vector<IntMatrix> generator_action);

  FiniteGroup group_;
  std::size_t rank_ = 0;
  std::vector<IntMatrix> generator_action_;
  std::vector<IntMatrix> element_action_;
};

/// Finitely generated abelian group Z^free_rank + sum Z/torsion[i], torsion
/// entries >= 2 with each dividing the next.
struct AbelianInvariants {
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;

  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  std::string to_string() const;
  friend bool operator==(const AbelianInvariants&,
                         const AbelianInvariants&) = default;
};

/// Canonical invariants from an arbitrary list of diagonal entries of a
/// presentation (entries equal to 1 dropped, zeros counted as free rank).
AbelianInvariants abelian_invariants_from_factors(
    const std::vector<Integer>& diagonal, std::size_t generators);

/// Z[G/H]: basis indexed by the right cosets of H, permuted by G.
GLattice permutation_lattice(const FiniteGroup& g, const Subgroup& h);

/// Hom(M, Z): action(g) becomes transpose(action(g^-1)).
GLattice dual(const GLattice& m);

/// Block-diagonal sum. Throws GroupMismatch.
GLattice direct_sum(const GLattice& a, const GLattice& b);

/// Rows form a basis of M^H, a saturated sublattice.
IntMatrix fixed_sublattice(const Subgroup& h, const GLattice& m);

/// H^1(H, M) as Z^1 / B^1 computed from all elements of H.
AbelianInvariants h1(const Subgroup& h, const GLattice& m);

struct CohomologyObstruction {
  Subgroup subgroup;
  AbelianInvariants invariants;
};

struct PredicateResult {
  bool holds = false;
  /// First subgroup (in subgroups() order) with nonvanishing H^1. Set iff
  /// !holds.
  std::optional<CohomologyObstruction> obstruction;
};

/// H^1(H, M) = 0 for every subgroup H.
PredicateResult is_coflasque(const GLattice& m);

/// H^1(H, dual(M)) = 0 for every subgroup H.
PredicateResult is_flasque(const GLattice& m);

struct PermutationCover {
  GLattice cover_lattice;
  /// cover rank x M rank; row i is the image of the i-th cover basis vector.
  IntMatrix projection;
  /// One entry per subgroup that contributes, with its copy count.
  std::vector<std::pair<Subgroup, std::size_t>> summand_tags;
};

/// P = sum over all subgroups H of Z[G/H]^{rank M^H} mapping onto M, with
/// P^H -> M^H onto for every H.
PermutationCover coflasque_cover(const GLattice& m);

/// Checks the equivariance, surjectivity and fixed-point surjectivity
/// invariants of a cover. Returns an empty string when all hold.
std::string verify_cover(const PermutationCover& cover, const GLattice& m);

struct InvertibilityResult {
  bool invertible = false;
  PermutationCover cover;
  /// M rank x cover rank equivariant section of the projection, when
  /// invertible.
  std::optional<IntMatrix> section;
  /// Proof that the section system has no integer solution, otherwise.
  std::optional<InfeasibilityCertificate> certificate;
  /// The linear system the certificate refers to (A x = b, x = vec(section)
  /// row-major). Kept so the certificate can be re-verified.
  IntMatrix system;
  IntVector rhs;
};

/// M is a direct summand of a permutation lattice iff the cover
/// P -> M splits equivariantly.
InvertibilityResult is_invertible(const GLattice& m);

/// section * projection == identity and section is equivariant.
bool verify_section(const GLattice& m, const PermutationCover& cover,
                    const IntMatrix& section);

}  // namespace specialred
