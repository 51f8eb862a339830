#pragma once

// Diagonal forms  sum_i alpha_i t^{a_i} x_i^2  over F_p(t_1, ..., t_n) and the
// parity criterion that certifies them anisotropic.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace specialred::forms {

using Exponent = std::vector<long>;

/// Laurent polynomial over F_p. Keys compare lexicographically, which is the
/// lex monomial order with t_1 > t_2 > ... > t_n; zero coefficients are never
/// stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::size_t vars, std::uint32_t prime)
      : vars_(vars), prime_(prime) {}

  static LaurentPoly monomial(std::size_t vars, std::uint32_t prime,
                              Exponent e, std::uint32_t coeff);

  std::size_t vars() const { return vars_; }
  std::uint32_t prime() const { return prime_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, std::uint32_t>& terms() const { return terms_; }
  /// Largest monomial in lex order. Requires !is_zero().
  const Exponent& leading_monomial() const { return terms_.rbegin()->first; }
  /// Highest total degree among the terms (0 for the zero polynomial).
  long total_degree() const;

  void add_term(const Exponent& e, std::uint32_t coeff);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::size_t vars_ = 0;
  std::uint32_t prime_ = 2;
  std::map<Exponent, std::uint32_t> terms_;
};

struct DiagonalFormSpec {
  std::size_t num_vars = 0;
  /// Odd prime for the coefficient field.
  std::uint32_t prime = 3;
  std::vector<Exponent> exponents;
  std::vector<std::uint32_t> coefficients;

  std::size_t size() const { return exponents.size(); }
  friend bool operator==(const DiagonalFormSpec&,
                         const DiagonalFormSpec&) = default;
};

/// Throws ValidationError on an ill-formed spec (empty, ragged exponents,
/// zero coefficients, even or composite prime).
void validate(const DiagonalFormSpec& spec);

enum class Anisotropy { Certified, Inapplicable };

/// Certified when the exponent vectors are pairwise distinct modulo 2.
Anisotropy anisotropy_criterion(const DiagonalFormSpec& spec);

/// sum_i alpha_i t^{a_i} x_i^2.
LaurentPoly evaluate(const DiagonalFormSpec& spec,
                     const std::vector<LaurentPoly>& x);

/// Leading monomial of each summand alpha_i t^{a_i} x_i^2, or nullopt for
/// x_i = 0.
std::vector<std::optional<Exponent>> summand_leading_monomials(
    const DiagonalFormSpec& spec, const std::vector<LaurentPoly>& x);

struct SearchOptions {
  long degree_bound = 3;
  std::size_t trials = 10000;
  std::uint64_t seed = 0x5eed;
};

/// Looks for a nonzero polynomial vector with entries of total degree
/// <= degree_bound on which the form vanishes: every constant vector when
/// there are at most 10^5 of them, then `trials` random vectors whose entries
/// alternate between single monomials and sparse polynomials. A returned
/// vector has been verified by exact evaluation.
std::optional<std::vector<LaurentPoly>> isotropy_search(
    const DiagonalFormSpec& spec, const SearchOptions& options = {});

/// Random polynomial in `vars` variables with nonnegative exponents, total
/// degree <= bound and between 1 and max_terms nonzero terms.
LaurentPoly random_polynomial(std::size_t vars, std::uint32_t prime,
                              long bound, std::size_t max_terms,
                              std::mt19937_64& rng);

}  // namespace specialred::forms
