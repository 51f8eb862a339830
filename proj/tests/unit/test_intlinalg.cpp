#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "specialred/errors.hpp"
#include "specialred/intlinalg.hpp"

using namespace specialred;

namespace {

IntVector ints(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

void check_smith(const IntMatrix& a, const SmithDecomposition& d) {
  CHECK(d.left * a * d.right == d.diag);
  CHECK(is_unimodular(d.left));
  CHECK(is_unimodular(d.right));
  CHECK(d.diag.is_diagonal());
  for (std::size_t i = 0; i < d.invariant_factors.size(); ++i) {
    CHECK(d.invariant_factors[i] > 0);
    CHECK(d.diag(i, i) == d.invariant_factors[i]);
    if (i + 1 < d.invariant_factors.size())
      CHECK(d.invariant_factors[i + 1] % d.invariant_factors[i] == 0);
  }
}

bool is_row_hnf(const IntMatrix& h, std::size_t rank) {
  std::size_t prev = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t p = 0;
    while (p < h.cols() && h(i, p) == 0) ++p;
    if (i >= rank) {
      if (p != h.cols()) return false;
      continue;
    }
    if (p == h.cols() || h(i, p) <= 0) return false;
    if (i > 0 && p <= prev) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h(k, p) < 0 || h(k, p) >= h(i, p)) return false;
    for (std::size_t k = i + 1; k < h.rows(); ++k)
      if (h(k, p) != 0) return false;
    prev = p;
  }
  return true;
}

}  // namespace

TEST_CASE("hnf of [[2,4],[6,8]]") {
  IntMatrix a{{2, 4}, {6, 8}};
  auto d = hnf(a);
  CHECK(d.transform * a == d.form);
  CHECK(abs(determinant(d.transform)) == 1);
  CHECK(d.form == IntMatrix{{2, 0}, {0, 4}});
  CHECK(d.rank == 2);
}

TEST_CASE("hnf fixed points") {
  auto id = hnf(IntMatrix::identity(3));
  CHECK(id.form == IntMatrix::identity(3));
  CHECK(id.transform == IntMatrix::identity(3));
  auto z = hnf(IntMatrix(2, 2));
  CHECK(z.form.is_zero());
  CHECK(z.transform == IntMatrix::identity(2));
  CHECK(z.rank == 0);
}

TEST_CASE("hnf shape on random input") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = rng() % 6, c = rng() % 6;
    IntMatrix a = oracle::random_matrix(r, c, 6, rng);
    auto d = hnf(a);
    CHECK(d.transform * a == d.form);
    CHECK(is_unimodular(d.transform));
    CHECK(is_row_hnf(d.form, d.rank));
    CHECK(d.rank == oracle::rational_rank(a));
  }
}

TEST_CASE("snf examples") {
  IntMatrix a{{2, 4}, {6, 8}};
  auto d = snf(a);
  check_smith(a, d);
  CHECK(d.invariant_factors == ints({2, 4}));
  CHECK(oracle::naive_invariant_factors(a) == ints({2, 4}));
  CHECK(oracle::minors_invariant_factors(a) == ints({2, 4}));

  CHECK(snf(IntMatrix::identity(4)).invariant_factors == ints({1, 1, 1, 1}));
  CHECK(snf(IntMatrix{{6}}).invariant_factors == ints({6}));
}

TEST_CASE("snf of empty and zero matrices") {
  for (auto [r, c] : {std::pair{0, 0}, {0, 3}, {3, 0}}) {
    auto d = snf(IntMatrix(r, c));
    CHECK(d.invariant_factors.empty());
    CHECK(d.left.rows() == static_cast<std::size_t>(r));
    CHECK(d.right.rows() == static_cast<std::size_t>(c));
  }
  CHECK(snf(IntMatrix(2, 3)).invariant_factors.empty());
}

TEST_CASE("snf stays exact beyond 64 bits") {
  IntMatrix a(2, 2);
  a(0, 0) = Integer("123456789012345678901234567890");
  a(0, 1) = Integer("987654321098765432109876543210");
  a(1, 0) = Integer("-55555555555555555555555555555");
  a(1, 1) = Integer("77777777777777777777777777777");
  auto d = snf(a);
  check_smith(a, d);
  CHECK(d.invariant_factors == oracle::naive_invariant_factors(a));
}

TEST_CASE("snf matches both oracles on random small matrices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix a = oracle::random_matrix(r, c, 10, rng);
    auto d = snf(a);
    check_smith(a, d);
    CHECK(d.invariant_factors == oracle::naive_invariant_factors(a));
    CHECK(d.invariant_factors == oracle::minors_invariant_factors(a));
    CHECK(invariant_factors(a) == d.invariant_factors);
  }
}

TEST_CASE("kernel_basis examples") {
  auto k = kernel_basis(IntMatrix{{1}, {-1}});
  REQUIRE(k.rows() == 1);
  CHECK((k == IntMatrix{{1, 1}} || k == IntMatrix{{-1, -1}}));
  CHECK(kernel_basis(IntMatrix::identity(2)).rows() == 0);
  auto z = kernel_basis(IntMatrix(2, 2));
  CHECK(z.rows() == 2);
  CHECK(abs(determinant(z)) == 1);
}

TEST_CASE("kernel_basis is a saturated kernel") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + rng() % 6, c = rng() % 5;
    IntMatrix a = oracle::random_matrix(r, c, 5, rng);
    if (t % 3 == 0 && r > 1)  // force a dependency
      for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = 2 * a(0, j);
    IntMatrix k = kernel_basis(a);
    CHECK(k.rows() == r - oracle::rational_rank(a));
    CHECK((k * a).is_zero());
    for (const auto& f : snf(k).invariant_factors) CHECK(f == 1);
  }
}

TEST_CASE("solve_linear examples") {
  auto x = solve_linear(IntMatrix{{2}}, ints({4}));
  REQUIRE(x);
  CHECK(*x == ints({2}));
  CHECK_FALSE(solve_linear(IntMatrix{{2}}, ints({3})));
  auto y = solve_linear(IntMatrix{{1, 1}, {0, 2}}, ints({3, 4}));
  REQUIRE(y);
  CHECK(*y == ints({1, 2}));
  CHECK_THROWS_AS(solve_linear(IntMatrix{{1, 1}}, ints({1, 2})),
                  DimensionMismatch);
}

TEST_CASE("solve_linear_certified returns solutions or certificates") {
  std::mt19937_64 rng(3);
  int solved = 0, refuted = 0;
  for (int t = 0; t < 300; ++t) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix a = oracle::random_matrix(r, c, 4, rng);
    IntVector b(r);
    std::uniform_int_distribution<long> d(-6, 6);
    for (auto& v : b) v = d(rng);
    auto res = solve_linear_certified(a, b);
    CHECK(res.solution.has_value() != res.certificate.has_value());
    if (res.solution) {
      CHECK(times_column(a, *res.solution) == b);
      ++solved;
    } else {
      CHECK(verify_certificate(a, b, *res.certificate));
      ++refuted;
    }
  }
  CHECK(solved > 20);
  CHECK(refuted > 20);
}

TEST_CASE("is_saturated examples") {
  CHECK(is_saturated(IntMatrix{{3, 1}}));
  CHECK_FALSE(is_saturated(IntMatrix{{2, 0}}));
  CHECK(is_saturated(IntMatrix::identity(3)));
  CHECK(is_saturated(IntMatrix(0, 3)));
  CHECK_THROWS_AS(is_saturated(IntMatrix{{1, 2}, {2, 4}}), RankDeficient);

  CHECK(oracle::saturated_mod_p(IntMatrix{{3, 1}}));
  CHECK_FALSE(oracle::saturated_mod_p(IntMatrix{{2, 0}}));
}

TEST_CASE("rank and determinant") {
  CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(determinant(IntMatrix{{2, 1}, {7, 4}}) == 1);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  CHECK(is_unimodular(IntMatrix{{0, 1}, {1, 0}}));
  CHECK_FALSE(is_unimodular(IntMatrix{{2, 0}, {0, 1}}));
}
