#include "specialred/laurent_forms.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "specialred/errors.hpp"

namespace specialred::forms {

LaurentPoly LaurentPoly::monomial(std::size_t vars, std::uint32_t prime,
                                  Exponent e, std::uint32_t coeff) {
  LaurentPoly p(vars, prime);
  p.add_term(e, coeff);
  return p;
}

long LaurentPoly::total_degree() const {
  long best = 0;
  for (const auto& [e, c] : terms_) {
    long d = 0;
    for (long x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

void LaurentPoly::add_term(const Exponent& e, std::uint32_t coeff) {
  coeff %= prime_;
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(e, coeff);
  if (inserted) return;
  it->second = static_cast<std::uint32_t>((it->second + coeff) % prime_);
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out(vars_, prime_);
  Exponent e(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t k = 0; k < vars_; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, static_cast<std::uint32_t>(
                          (std::uint64_t{ca} * cb) % prime_));
    }
  }
  return out;
}

void validate(const DiagonalFormSpec& spec) {
  auto fail = [](const std::string& path, const std::string& msg) {
    throw ValidationError(path, msg);
  };
  if (spec.prime < 3 || spec.prime > 65521 || spec.prime % 2 == 0)
    fail("/prime", "must be an odd prime below 2^16");
  for (std::uint32_t d = 3; d * d <= spec.prime; d += 2)
    if (spec.prime % d == 0) fail("/prime", "must be prime");
  if (spec.exponents.empty()) fail("/exponents", "need at least one summand");
  if (spec.coefficients.size() != spec.exponents.size())
    fail("/coefficients", "need one coefficient per exponent vector");
  for (std::size_t i = 0; i < spec.exponents.size(); ++i)
    if (spec.exponents[i].size() != spec.num_vars)
      fail("/exponents/" + std::to_string(i),
           "length must equal num_vars = " + std::to_string(spec.num_vars));
  for (std::size_t i = 0; i < spec.coefficients.size(); ++i)
    if (spec.coefficients[i] % spec.prime == 0)
      fail("/coefficients/" + std::to_string(i), "must be nonzero mod p");
}

Anisotropy anisotropy_criterion(const DiagonalFormSpec& spec) {
  std::set<std::vector<bool>> parities;
  for (const auto& a : spec.exponents) {
    std::vector<bool> par(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) par[k] = (a[k] % 2) != 0;
    if (!parities.insert(std::move(par)).second) return Anisotropy::Inapplicable;
  }
  return Anisotropy::Certified;
}

namespace {

LaurentPoly summand(const DiagonalFormSpec& spec, std::size_t i,
                    const LaurentPoly& xi) {
  LaurentPoly coeff = LaurentPoly::monomial(spec.num_vars, spec.prime,
                                            spec.exponents[i],
                                            spec.coefficients[i]);
  return coeff * (xi * xi);
}

std::vector<Exponent> monomials_up_to(std::size_t vars, long bound) {
  std::vector<Exponent> out;
  Exponent e(vars, 0);
  for (;;) {
    long total = 0;
    for (long x : e) total += x;
    if (total <= bound) out.push_back(e);
    std::size_t k = 0;
    while (k < vars && ++e[k] > bound) e[k++] = 0;
    if (k == vars) break;
  }
  return out;
}

LaurentPoly random_from(const std::vector<Exponent>& monos, std::size_t vars,
                        std::uint32_t prime, std::size_t max_terms,
                        std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<std::uint32_t> coeff(1, prime - 1);
  LaurentPoly p(vars, prime);
  const std::size_t n = nterms(rng);
  while (p.is_zero())
    for (std::size_t t = 0; t < n; ++t) p.add_term(monos[pick(rng)], coeff(rng));
  return p;
}

bool is_witness(const DiagonalFormSpec& spec,
                const std::vector<LaurentPoly>& x) {
  bool nonzero = std::any_of(x.begin(), x.end(),
                             [](const LaurentPoly& p) { return !p.is_zero(); });
  return nonzero && evaluate(spec, x).is_zero();
}

}  // namespace

LaurentPoly evaluate(const DiagonalFormSpec& spec,
                     const std::vector<LaurentPoly>& x) {
  if (x.size() != spec.size())
    throw DimensionMismatch("vector length does not match the form");
  LaurentPoly total(spec.num_vars, spec.prime);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) total = total + summand(spec, i, x[i]);
  return total;
}

std::vector<std::optional<Exponent>> summand_leading_monomials(
    const DiagonalFormSpec& spec, const std::vector<LaurentPoly>& x) {
  std::vector<std::optional<Exponent>> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out[i] = summand(spec, i, x[i]).leading_monomial();
  return out;
}

LaurentPoly random_polynomial(std::size_t vars, std::uint32_t prime,
                              long bound, std::size_t max_terms,
                              std::mt19937_64& rng) {
  return random_from(monomials_up_to(vars, bound), vars, prime, max_terms,
                     rng);
}

std::optional<std::vector<LaurentPoly>> isotropy_search(
    const DiagonalFormSpec& spec, const SearchOptions& options) {
  validate(spec);
  const std::size_t m = spec.size();
  const std::size_t vars = spec.num_vars;
  const std::uint32_t p = spec.prime;
  const Exponent zero(vars, 0);

  // Constant vectors, lexicographically with the last entry fastest.
  double space = 1;
  for (std::size_t i = 0; i < m; ++i) space *= p;
  if (space <= 1e5) {
    std::vector<std::uint32_t> c(m, 0);
    for (;;) {
      std::size_t k = m;
      while (k > 0 && ++c[k - 1] == p) c[--k] = 0;
      if (k == 0) break;
      std::vector<LaurentPoly> x;
      for (auto v : c) x.push_back(LaurentPoly::monomial(vars, p, zero, v));
      if (is_witness(spec, x)) return x;
    }
  }

  if (options.degree_bound < 0) return std::nullopt;
  const auto monos = monomials_up_to(vars, options.degree_bound);
  std::mt19937_64 rng(options.seed);
  std::bernoulli_distribution drop(0.25);
  for (std::size_t t = 0; t < options.trials; ++t) {
    const std::size_t max_terms = (t % 2 == 0) ? 1 : 4;
    std::vector<LaurentPoly> x;
    x.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
      x.push_back(drop(rng) ? LaurentPoly(vars, p)
                            : random_from(monos, vars, p, max_terms, rng));
    if (is_witness(spec, x)) return x;
  }
  return std::nullopt;
}

}  // namespace specialred::forms
