#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "specialred/torus.hpp"
#include "support.hpp"

using namespace specialred;

TEST_CASE("torus examples") {
  auto c2 = FiniteGroup::cyclic(2);
  auto weil = is_special_torus(
      {permutation_lattice(c2, Subgroup::trivial(c2))});
  CHECK(weil.verdict == Verdict::Special);
  CHECK(weil.criterion == criteria::kTorusInvertibility);
  const auto* sec = std::get_if<SectionWitness>(&weil.witness);
  REQUIRE(sec);
  CHECK(sec->section * sec->projection == IntMatrix::identity(2));

  auto r = is_special_torus({support::sign_plus_trivial()});
  CHECK(r.verdict == Verdict::NotSpecial);
  const auto* ob = std::get_if<TorusObstructionWitness>(&r.witness);
  REQUIRE(ob);
  REQUIRE(ob->obstruction);
  CHECK(ob->obstruction->subgroup.order() == 2);
  CHECK(ob->obstruction->invariants.to_string() == "Z/2");
  CHECK(ob->certificate);

  for (std::size_t rank = 0; rank <= 5; ++rank)
    CHECK(is_special_torus(TorusDescriptor::split(rank)).verdict ==
          Verdict::Special);
  CHECK(is_special_torus({GLattice::trivial(FiniteGroup::symmetric(3), 3)})
            .verdict == Verdict::Special);
}

TEST_CASE("cocharacter profile examples") {
  auto c2 = FiniteGroup::cyclic(2);
  for (const auto& [h, inv] : cocharacter_h1_profile(
           {permutation_lattice(c2, Subgroup::trivial(c2))}))
    CHECK(inv.is_trivial());
  auto prof = cocharacter_h1_profile({support::sign_plus_trivial()});
  REQUIRE(prof.size() == 2);
  CHECK(prof[1].first.order() == 2);
  CHECK(prof[1].second.to_string() == "Z/2");
  auto triv = cocharacter_h1_profile(TorusDescriptor::split(2));
  REQUIRE(triv.size() == 1);
  CHECK(triv[0].second.is_trivial());
}

TEST_CASE("special tori have trivial cocharacter profile") {
  for (const auto& e : support::lattice_library()) {
    auto r = is_special_torus({e.lattice});
    if (r.verdict != Verdict::Special) continue;
    for (const auto& [h, inv] : cocharacter_h1_profile({e.lattice}))
      CHECK_MESSAGE(inv.is_trivial(), e.name);
  }
}

TEST_CASE("verdict is invariant under change of basis") {
  std::mt19937_64 rng(2024);
  for (const auto& e : support::lattice_library()) {
    if (e.lattice.rank() < 2 || e.lattice.rank() > 4) continue;
    const Verdict v = is_special_torus({e.lattice}).verdict;
    for (int t = 0; t < 2; ++t) {
      auto [b, binv] = oracle::random_unimodular(e.lattice.rank(), rng);
      CHECK_MESSAGE(is_special_torus({e.lattice.change_basis(b, binv)})
                            .verdict == v,
                    e.name);
    }
  }
}

TEST_CASE("verdict is invariant under adding a permutation lattice") {
  for (const auto& e : support::lattice_library()) {
    if (e.lattice.rank() > 3 || e.lattice.group().order() > 6) continue;
    const auto& g = e.lattice.group();
    const Verdict v = is_special_torus({e.lattice}).verdict;
    auto p = permutation_lattice(g, Subgroup::whole(g));
    CHECK_MESSAGE(is_special_torus({direct_sum(e.lattice, p)}).verdict == v,
                  e.name);
    if (g.order() <= 3) {
      auto reg = permutation_lattice(g, Subgroup::trivial(g));
      CHECK_MESSAGE(is_special_torus({direct_sum(reg, e.lattice)}).verdict == v,
                    e.name);
    }
  }
}
