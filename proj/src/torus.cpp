#include "specialred/torus.hpp"

namespace specialred {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Special:
      return "Special";
    case Verdict::NotSpecial:
      return "NotSpecial";
    case Verdict::Undecided:
      return "Undecided";
  }
  return "Undecided";
}

ClassificationReport is_special_torus(const TorusDescriptor& t) {
  const GLattice& x = t.character_lattice;
  InvertibilityResult inv = is_invertible(x);
  ClassificationReport report;
  report.criterion = criteria::kTorusInvertibility;
  report.notes.push_back("character lattice rank " + std::to_string(x.rank()) +
                         " over a group of order " +
                         std::to_string(x.group().order()));
  report.notes.push_back("permutation cover rank " +
                         std::to_string(inv.cover.cover_lattice.rank()));
  if (inv.invertible) {
    report.verdict = Verdict::Special;
    report.witness = SectionWitness{*inv.section, inv.cover.projection,
                                    inv.cover.cover_lattice.rank()};
    return report;
  }
  report.verdict = Verdict::NotSpecial;
  TorusObstructionWitness w;
  w.certificate = std::move(inv.certificate);
  // Special tori are flasque, so look at the cocharacter lattice first.
  PredicateResult flasque = is_flasque(x);
  if (!flasque.holds) {
    w.obstruction = std::move(flasque.obstruction);
    w.obstruction_lattice = "cocharacter";
  } else {
    PredicateResult coflasque = is_coflasque(x);
    if (!coflasque.holds) {
      w.obstruction = std::move(coflasque.obstruction);
      w.obstruction_lattice = "character";
    }
  }
  report.witness = std::move(w);
  return report;
}

std::vector<std::pair<Subgroup, AbelianInvariants>> cocharacter_h1_profile(
    const TorusDescriptor& t) {
  const GLattice n = dual(t.character_lattice);
  std::vector<std::pair<Subgroup, AbelianInvariants>> out;
  for (auto& h : subgroups(n.group())) {
    AbelianInvariants inv = h1(h, n);
    out.emplace_back(std::move(h), std::move(inv));
  }
  return out;
}

}  // namespace specialred
