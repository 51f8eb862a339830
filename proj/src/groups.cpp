#include "specialred/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "specialred/errors.hpp"

namespace specialred {

namespace {

Permutation compose(const Permutation& first, const Permutation& second) {
  Permutation out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
  return out;
}

void check_permutation(const Permutation& p, std::size_t degree,
                       std::size_t which) {
  if (p.size() != degree)
    throw InvalidAction("generator " + std::to_string(which) + " has length " +
                        std::to_string(p.size()) + ", expected degree " +
                        std::to_string(degree));
  std::vector<bool> hit(degree, false);
  for (auto v : p) {
    if (v >= degree || hit[v])
      throw InvalidAction("generator " + std::to_string(which) +
                          " is not a permutation of 0.." +
                          std::to_string(degree ? degree - 1 : 0));
    hit[v] = true;
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_generators(std::size_t degree,
                                         std::vector<Permutation> generators,
                                         const Limits& limits) {
  for (std::size_t g = 0; g < generators.size(); ++g)
    check_permutation(generators[g], degree, g);

  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->generators = std::move(generators);

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::map<Permutation, std::size_t> index;
  impl->elements.push_back(id);
  impl->parent.push_back(0);
  impl->via.push_back(0);
  index.emplace(id, 0);
  for (std::size_t e = 0; e < impl->elements.size(); ++e) {
    for (std::size_t g = 0; g < impl->generators.size(); ++g) {
      Permutation p = compose(impl->elements[e], impl->generators[g]);
      if (index.count(p)) continue;
      if (impl->elements.size() >= limits.max_group_order)
        throw OrderCapExceeded("group closure exceeds order cap " +
                               std::to_string(limits.max_group_order));
      index.emplace(p, impl->elements.size());
      impl->elements.push_back(std::move(p));
      impl->parent.push_back(e);
      impl->via.push_back(g);
    }
  }

  const std::size_t n = impl->elements.size();
  impl->table.resize(n * n);
  impl->inverses.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t ab = index.at(compose(impl->elements[a], impl->elements[b]));
      impl->table[a * n + b] = ab;
      if (ab == 0) impl->inverses[a] = b;
    }
  }
  for (const auto& g : impl->generators)
    impl->generator_elements.push_back(index.at(g));
  return FiniteGroup(std::move(impl));
}

FiniteGroup FiniteGroup::cyclic(std::size_t n, const Limits& limits) {
  if (n == 0) throw InvalidAction("cyclic group of order 0");
  if (n > limits.max_group_order)
    throw OrderCapExceeded("cyclic group of order " + std::to_string(n) +
                           " exceeds cap " +
                           std::to_string(limits.max_group_order));
  if (n == 1) return trivial();
  Permutation shift(n);
  for (std::size_t i = 0; i < n; ++i)
    shift[i] = static_cast<std::uint32_t>((i + 1) % n);
  return from_generators(n, {shift}, limits);
}

FiniteGroup FiniteGroup::symmetric(std::size_t n, const Limits& limits) {
  if (n <= 1) return trivial();
  Permutation swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0u);
  std::swap(swap[0], swap[1]);
  for (std::size_t i = 0; i < n; ++i)
    cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
  if (n == 2) return from_generators(n, {swap}, limits);
  return from_generators(n, {cycle, swap}, limits);
}

FiniteGroup FiniteGroup::dihedral(std::size_t n, const Limits& limits) {
  if (n == 2) return from_generators(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, limits);
  if (n < 3) throw InvalidAction("dihedral group needs n >= 2");
  Permutation rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint32_t>((i + 1) % n);
    refl[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return from_generators(n, {rot, refl}, limits);
}

FiniteGroup FiniteGroup::trivial() { return from_generators(1, {}); }

std::size_t FiniteGroup::index_of(const Permutation& p) const {
  auto it = std::find(impl_->elements.begin(), impl_->elements.end(), p);
  return static_cast<std::size_t>(it - impl_->elements.begin());
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<std::size_t> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  if (elements_.empty() || elements_.front() != FiniteGroup::identity_index)
    throw InvalidAction("subgroup must contain the identity");
  for (auto a : elements_) {
    if (a >= parent_.order())
      throw InvalidAction("subgroup element index out of range");
    if (!contains(parent_.inverse(a)))
      throw InvalidAction("subgroup element list not closed under inverse");
    for (auto b : elements_)
      if (!contains(parent_.multiply(a, b)))
        throw InvalidAction("subgroup element list not closed under product");
  }
}

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<std::size_t> all(g.order());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return Subgroup(g, std::move(all));
}

Subgroup Subgroup::trivial(const FiniteGroup& g) {
  return Subgroup(g, {FiniteGroup::identity_index});
}

namespace {

std::vector<bool> closure(const FiniteGroup& g,
                          const std::vector<std::size_t>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::size_t> queue{FiniteGroup::identity_index};
  in[FiniteGroup::identity_index] = true;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (auto s : gens) {
      std::size_t p = g.multiply(queue[q], s);
      if (!in[p]) {
        in[p] = true;
        queue.push_back(p);
      }
    }
  }
  return in;
}

std::vector<std::size_t> members(const std::vector<bool>& in) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

}  // namespace

Subgroup Subgroup::generated_by(const FiniteGroup& g,
                                const std::vector<std::size_t>& generators) {
  for (auto s : generators)
    if (s >= g.order()) throw InvalidAction("generator index out of range");
  return Subgroup(g, members(closure(g, generators)));
}

bool Subgroup::contains(std::size_t element) const {
  return std::binary_search(elements_.begin(), elements_.end(), element);
}

std::vector<Subgroup> subgroups(const FiniteGroup& g) {
  struct Found {
    std::vector<bool> in;
    std::vector<std::size_t> gens;
    std::size_t order;
  };
  const std::size_t n = g.order();
  std::vector<Found> found;
  std::map<std::vector<bool>, std::size_t> seen;
  std::vector<bool> whole(n, true);

  auto record = [&](std::vector<bool> in, std::vector<std::size_t> gens) {
    if (seen.count(in)) return;
    std::size_t order = static_cast<std::size_t>(
        std::count(in.begin(), in.end(), true));
    seen.emplace(in, found.size());
    found.push_back({std::move(in), std::move(gens), order});
  };

  record(closure(g, {}), {});
  for (std::size_t idx = 0; idx < found.size(); ++idx) {
    for (std::size_t x = 0; x < n; ++x) {
      if (found[idx].in[x]) continue;
      std::vector<std::size_t> gens = found[idx].gens;
      gens.push_back(x);
      // Lagrange: a proper overgroup of a subgroup of index 2 is everything.
      if (2 * found[idx].order > n) {
        record(whole, std::move(gens));
        continue;
      }
      std::vector<bool> in = closure(g, gens);
      record(std::move(in), std::move(gens));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& f : found) out.emplace_back(g, members(f.in));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

CosetTable right_cosets(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  CosetTable t;
  t.coset_of.assign(g.order(), unset);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (t.coset_of[x] != unset) continue;
    const std::size_t c = t.representative.size();
    t.representative.push_back(x);
    for (auto e : h.elements()) t.coset_of[g.multiply(e, x)] = c;
  }
  return t;
}

}  // namespace specialred
