#include "specialred/reductive.hpp"

#include <algorithm>
#include <string>

#include "specialred/errors.hpp"

namespace specialred {

namespace {

std::string describe(const FactorDescriptor& f) {
  std::string ext = f.extension_degree == 1
                        ? std::string()
                        : " over an extension of degree " +
                              std::to_string(f.extension_degree);
  if (f.kind == FactorKind::Sp) return "Sp_" + std::to_string(2 * f.n) + ext;
  if (f.index_d == 1) return "SL_" + std::to_string(f.n) + ext;
  return "SL_1(A) with deg A = " + std::to_string(f.n) +
         ", ind A = " + std::to_string(f.index_d) + ext;
}

std::vector<FactorDescriptor> split_all(std::vector<FactorDescriptor> fs) {
  for (auto& f : fs) f.index_d = 1;
  return fs;
}

std::optional<std::size_t> first_nonsplit(
    const std::vector<FactorDescriptor>& factors) {
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i].nonsplit()) return i;
  return std::nullopt;
}

}  // namespace

void validate_derived_shape(const std::vector<FactorDescriptor>& factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    const std::string where = "factor " + std::to_string(i) + ": ";
    if (f.n < 1) throw ShapeError(where + "n must be at least 1");
    if (f.extension_degree < 1)
      throw ShapeError(where + "extension degree must be at least 1");
    if (f.kind == FactorKind::Sp) {
      if (f.index_d != 1)
        throw ShapeError(where + "Sp factors carry no algebra index");
      continue;
    }
    if (f.index_d < 1) throw ShapeError(where + "index must be at least 1");
    if (f.n % f.index_d != 0)
      throw ShapeError(where + "index " + std::to_string(f.index_d) +
                       " does not divide degree " + std::to_string(f.n));
  }
}

InnerDescriptor::InnerDescriptor(std::vector<FactorDescriptor> factors,
                                 std::vector<Integer> center_orders,
                                 IntMatrix embedding)
    : factors_(std::move(factors)),
      center_orders_(std::move(center_orders)),
      embedding_(std::move(embedding)) {
  validate_derived_shape(factors_);
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].extension_degree != 1)
      throw ShapeError("factor " + std::to_string(i) +
                       ": inner-type factors are defined over the base field");
  std::stable_partition(factors_.begin(), factors_.end(),
                        [](const FactorDescriptor& f) { return f.nonsplit(); });
  nonsplit_ = static_cast<std::size_t>(
      std::count_if(factors_.begin(), factors_.end(),
                    [](const FactorDescriptor& f) { return f.nonsplit(); }));
  const std::size_t q = center_orders_.size();
  for (std::size_t j = 0; j < q; ++j)
    if (center_orders_[j] < 1)
      throw ShapeError("center order m_" + std::to_string(j) +
                       " must be positive");
  if (embedding_.rows() == 0) embedding_ = IntMatrix(0, q);
  if (embedding_.rows() != nonsplit_ || embedding_.cols() != q)
    throw ShapeError("embedding must be " + std::to_string(nonsplit_) + "x" +
                     std::to_string(q) + " (nonsplit factors x center "
                     "orders), got " + std::to_string(embedding_.rows()) +
                     "x" + std::to_string(embedding_.cols()));
  compute_b(*this);
}

IntMatrix compute_b(const InnerDescriptor& desc) {
  const std::size_t s = desc.nonsplit_count();
  const std::size_t q = desc.center_orders().size();
  IntMatrix b(s, q);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      Integer num = desc.embedding()(i, j) * desc.factors()[i].n;
      const Integer& m = desc.center_orders()[j];
      if (!mpz_divisible_p(num.get_mpz_t(), m.get_mpz_t()))
        throw Indivisible("m_" + std::to_string(j) + " = " + m.get_str() +
                          " does not divide a_" + std::to_string(i) + "," +
                          std::to_string(j) + " * n_" + std::to_string(i) +
                          " = " + num.get_str());
      mpz_divexact(b(i, j).get_mpz_t(), num.get_mpz_t(), m.get_mpz_t());
    }
  }
  return b;
}

IntMatrix saturation_matrix(const InnerDescriptor& desc) {
  const std::size_t s = desc.nonsplit_count();
  IntMatrix d(s, s);
  for (std::size_t i = 0; i < s; ++i) d(i, i) = desc.factors()[i].index_d;
  return d.hstack(compute_b(desc));
}

ClassificationReport classify_semisimple(
    const std::vector<FactorDescriptor>& factors) {
  validate_derived_shape(factors);
  ClassificationReport r;
  r.criterion = criteria::kSemisimpleSplitFactors;
  for (const auto& f : factors) r.notes.push_back("factor: " + describe(f));
  if (auto i = first_nonsplit(factors)) {
    r.verdict = Verdict::NotSpecial;
    r.witness = FactorWitness{
        *i, describe(factors[*i]) + " is not special since its algebra is "
                                    "not split"};
    return r;
  }
  r.verdict = Verdict::Special;
  return r;
}

ClassificationReport classify_inner(const InnerDescriptor& desc) {
  ClassificationReport r;
  r.criterion = criteria::kInnerSaturation;
  const IntMatrix m = saturation_matrix(desc);
  r.notes.push_back("saturation matrix " + m.to_string());
  if (is_saturated(m)) {
    r.verdict = Verdict::Special;
    r.witness = SaturationWitness{m, invariant_factors(m)};
    return r;
  }
  SmithDecomposition d = snf(m);
  std::size_t i = 0;
  while (d.invariant_factors[i] == 1) ++i;
  NonSaturationWitness w{m, d.left.row_vector(i), d.invariant_factors[i], {}};
  w.combination = row_times(w.coefficients, m);
  r.notes.push_back("invariant factor " + w.divisor.get_str() +
                    " at position " + std::to_string(i));
  r.verdict = Verdict::NotSpecial;
  r.witness = std::move(w);
  return r;
}

ClassificationReport classify_inner_decomposed(const InnerDescriptor& desc) {
  const std::size_t s = desc.nonsplit_count();
  const std::size_t q = desc.center_orders().size();
  if (q != desc.factors().size())
    throw NotDecomposed("need one center order per factor (q = r), got q = " +
                        std::to_string(q) + ", r = " +
                        std::to_string(desc.factors().size()));
  const IntMatrix& a = desc.embedding();
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      if (i != j && sgn(a(i, j)) != 0)
        throw NotDecomposed("a_" + std::to_string(i) + "," +
                            std::to_string(j) + " is off the diagonal");
    }
    Integer g = gcd(a(i, i), desc.center_orders()[i]);
    if (g != 1)
      throw NotDecomposed("mu_" + desc.center_orders()[i].get_str() +
                          " does not embed in factor " + std::to_string(i));
  }
  ClassificationReport r;
  r.criterion = criteria::kInnerCoprimality;
  r.verdict = Verdict::Special;
  for (std::size_t i = 0; i < s; ++i) {
    const auto& f = desc.factors()[i];
    Integer quotient = Integer(f.n) / desc.center_orders()[i];
    Integer g = gcd(Integer(f.index_d), quotient);
    r.notes.push_back("factor " + std::to_string(i) + ": gcd(" +
                      std::to_string(f.index_d) + ", " + quotient.get_str() +
                      ") = " + g.get_str());
    if (g != 1 && r.verdict == Verdict::Special) {
      r.verdict = Verdict::NotSpecial;
      r.witness = FactorWitness{
          i, "index " + std::to_string(f.index_d) + " and n/m = " +
                 quotient.get_str() + " share the factor " + g.get_str()};
    }
  }
  return r;
}

ClassificationReport classify_quasisplit(
    const std::vector<FactorDescriptor>& factors,
    const TorusDescriptor& coradical) {
  validate_derived_shape(factors);
  ClassificationReport r;
  r.criterion = criteria::kQuasisplit;
  if (auto i = first_nonsplit(factors)) {
    r.verdict = Verdict::NotSpecial;
    r.witness = FactorWitness{
        *i, describe(factors[*i]) +
                " is not split, so the derived subgroup is not special"};
    return r;
  }
  ClassificationReport torus = is_special_torus(coradical);
  r.notes = std::move(torus.notes);
  r.verdict = torus.verdict;
  r.witness = std::move(torus.witness);
  if (r.verdict == Verdict::NotSpecial)
    r.notes.push_back("coradical is not a special torus");
  return r;
}

ClassificationReport classify(const GroupDescriptor& desc) {
  if (const auto* t = std::get_if<TorusDescriptor>(&desc))
    return is_special_torus(*t);
  if (const auto* s = std::get_if<SemisimpleGroup>(&desc))
    return classify_semisimple(s->factors);
  if (const auto* in = std::get_if<InnerDescriptor>(&desc))
    return classify_inner(*in);
  if (const auto* qs = std::get_if<QuasisplitGroup>(&desc))
    return classify_quasisplit(qs->factors, qs->coradical);

  const auto& g = std::get<GeneralGroup>(desc);
  validate_derived_shape(g.factors);
  ClassificationReport torus = is_special_torus(g.coradical);
  if (torus.verdict == Verdict::NotSpecial) {
    torus.criterion = criteria::kCoradical;
    torus.notes.push_back("coradical is not a special torus");
    return torus;
  }
  if (g.coradical.rank() == 0) return classify_semisimple(g.factors);
  if (!first_nonsplit(g.factors))
    return classify_quasisplit(g.factors, g.coradical);
  ClassificationReport r;
  r.verdict = Verdict::Undecided;
  r.criterion = criteria::kUndecided;
  r.notes.push_back(
      "derived shape valid and coradical special; a nonsplit factor without "
      "inner-type center data leaves the remaining condition open");
  return r;
}

GroupDescriptor quasisplit_form(const GroupDescriptor& desc) {
  return std::visit(
      [](const auto& d) -> GroupDescriptor {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, TorusDescriptor>) {
          return d;
        } else if constexpr (std::is_same_v<T, SemisimpleGroup>) {
          return SemisimpleGroup{split_all(d.factors)};
        } else if constexpr (std::is_same_v<T, InnerDescriptor>) {
          return InnerDescriptor(split_all(d.factors()), d.center_orders(),
                                 IntMatrix(0, d.center_orders().size()));
        } else if constexpr (std::is_same_v<T, QuasisplitGroup>) {
          return QuasisplitGroup{split_all(d.factors), d.coradical};
        } else {
          return GeneralGroup{split_all(d.factors), d.coradical};
        }
      },
      desc);
}

ClassificationReport quasisplit_form_special(const GroupDescriptor& desc) {
  return classify(quasisplit_form(desc));
}

}  // namespace specialred
