#pragma once

// Descriptors for reductive groups and the speciality classifiers built on
// them. Central simple algebras appear only through (degree n, index d) and
// field extensions only through their degree.

#include <cstddef>
#include <variant>
#include <vector>

#include "specialred/intlinalg.hpp"
#include "specialred/report.hpp"
#include "specialred/torus.hpp"

namespace specialred {

enum class FactorKind { SL1, Sp };

/// One almost-simple piece R_{K|k}(G_i) of the derived subgroup. For SL1,
/// G_i = SL_1(A) with deg A = n and ind A = index_d (index_d = 1 is SL_n).
/// For Sp, G_i = Sp_{2n}.
struct FactorDescriptor {
  FactorKind kind = FactorKind::SL1;
  long n = 1;
  long index_d = 1;
  long extension_degree = 1;

  static FactorDescriptor sl1(long n, long d, long ext = 1) {
    return {FactorKind::SL1, n, d, ext};
  }
  static FactorDescriptor sp(long n, long ext = 1) {
    return {FactorKind::Sp, n, 1, ext};
  }
  bool nonsplit() const { return kind == FactorKind::SL1 && index_d >= 2; }

  friend bool operator==(const FactorDescriptor&,
                         const FactorDescriptor&) = default;
};

/// Inner form of a split group. `embedding` is s x q with s the number of
/// nonsplit factors; row i holds the exponents a_{i,j} of the map
/// mu_{m_1} x ... x mu_{m_q} -> mu_{n_i}.
class InnerDescriptor {
 public:
  /// Stable-sorts nonsplit factors first (their relative order, and thus the
  /// alignment with the embedding rows, is kept) and validates every
  /// invariant. Throws ShapeError or Indivisible.
  InnerDescriptor(std::vector<FactorDescriptor> factors,
                  std::vector<Integer> center_orders, IntMatrix embedding);

  const std::vector<FactorDescriptor>& factors() const { return factors_; }
  const std::vector<Integer>& center_orders() const { return center_orders_; }
  const IntMatrix& embedding() const { return embedding_; }
  /// Number of nonsplit factors; they occupy positions 0..s-1.
  std::size_t nonsplit_count() const { return nonsplit_; }

  friend bool operator==(const InnerDescriptor&,
                         const InnerDescriptor&) = default;

 private:
  std::vector<FactorDescriptor> factors_;
  std::vector<Integer> center_orders_;
  IntMatrix embedding_;
  std::size_t nonsplit_ = 0;
};

struct SemisimpleGroup {
  std::vector<FactorDescriptor> factors;
  friend bool operator==(const SemisimpleGroup&,
                         const SemisimpleGroup&) = default;
};

struct QuasisplitGroup {
  std::vector<FactorDescriptor> factors;
  TorusDescriptor coradical;
  friend bool operator==(const QuasisplitGroup&,
                         const QuasisplitGroup&) = default;
};

struct GeneralGroup {
  std::vector<FactorDescriptor> factors;
  TorusDescriptor coradical;
  friend bool operator==(const GeneralGroup&, const GeneralGroup&) = default;
};

using GroupDescriptor = std::variant<TorusDescriptor, SemisimpleGroup,
                                     InnerDescriptor, QuasisplitGroup,
                                     GeneralGroup>;

/// Throws ShapeError naming the first factor that is not SL_1(A) with
/// d | n or Sp_{2n}.
void validate_derived_shape(const std::vector<FactorDescriptor>& factors);

ClassificationReport classify_semisimple(
    const std::vector<FactorDescriptor>& factors);

/// b_{i,j} = a_{i,j} n_i / m_j. Throws Indivisible.
IntMatrix compute_b(const InnerDescriptor& desc);

/// [diag(d_1..d_s) | b], s x (s + q).
IntMatrix saturation_matrix(const InnerDescriptor& desc);

ClassificationReport classify_inner(const InnerDescriptor& desc);

/// Shortcut when the center decomposes along the factors: q = r, a is
/// diagonal with a_{i,i} prime to m_i. Throws NotDecomposed otherwise.
ClassificationReport classify_inner_decomposed(const InnerDescriptor& desc);

ClassificationReport classify_quasisplit(
    const std::vector<FactorDescriptor>& factors,
    const TorusDescriptor& coradical);

ClassificationReport classify(const GroupDescriptor& desc);

/// Every algebra replaced by a split one of the same degree.
GroupDescriptor quasisplit_form(const GroupDescriptor& desc);

ClassificationReport quasisplit_form_special(const GroupDescriptor& desc);

}  // namespace specialred
