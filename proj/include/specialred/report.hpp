#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "specialred/glattice.hpp"
#include "specialred/intlinalg.hpp"

namespace specialred {

enum class Verdict { Special, NotSpecial, Undecided };

std::string to_string(Verdict v);

/// Equivariant splitting of the permutation cover of a character lattice.
struct SectionWitness {
  IntMatrix section;
  IntMatrix projection;
  std::size_t cover_rank = 0;
};

/// The cover does not split. `certificate` refers to the section system;
/// `obstruction` is a subgroup with nonvanishing H^1 when one exists, tagged
/// with the lattice it was found on ("cocharacter" or "character").
struct TorusObstructionWitness {
  std::optional<InfeasibilityCertificate> certificate;
  std::optional<CohomologyObstruction> obstruction;
  std::string obstruction_lattice;
};

/// Saturated inner-type matrix and its (all-one) invariant factors.
struct SaturationWitness {
  IntMatrix matrix;
  IntVector invariant_factors;
};

/// A primitive c with sum_i c_i * row_i divisible by `divisor` >= 2.
struct NonSaturationWitness {
  IntMatrix matrix;
  IntVector coefficients;
  Integer divisor;
  IntVector combination;
};

/// The first factor that breaks a criterion.
struct FactorWitness {
  std::size_t factor_index = 0;
  std::string reason;
};

using Witness = std::variant<std::monostate, SectionWitness,
                             TorusObstructionWitness, SaturationWitness,
                             NonSaturationWitness, FactorWitness>;

struct ClassificationReport {
  Verdict verdict = Verdict::Undecided;
  std::string criterion;
  Witness witness;
  /// Free-form lines for --explain output.
  std::vector<std::string> notes;
};

namespace criteria {
inline constexpr const char* kTorusInvertibility = "torus invertibility";
inline constexpr const char* kSemisimpleSplitFactors =
    "semisimple split factors";
inline constexpr const char* kInnerSaturation = "inner-type saturation";
inline constexpr const char* kInnerCoprimality = "inner-type coprimality";
inline constexpr const char* kQuasisplit = "quasisplit derived and coradical";
inline constexpr const char* kCoradical = "coradical special torus";
inline constexpr const char* kUndecided =
    "torsor-lifting condition not effective for this descriptor";
}  // namespace criteria

}  // namespace specialred
