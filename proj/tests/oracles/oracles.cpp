#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

using Dense = std::vector<std::vector<Integer>>;

Dense dense(const IntMatrix& a) {
  Dense d(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d[i][j] = a(i, j);
  return d;
}

// Replaces (x, y) by (s x + t y, -(y/g) x + (x/g) y), a determinant-one
// transformation putting gcd(x, y) in the first slot and 0 in the second.
void euclid_pair(Integer& x, Integer& y, Integer& s, Integer& t, Integer& g,
                 Integer& xg, Integer& yg) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(),
             y.get_mpz_t());
  if (abs(g) == abs(x)) {  // plain subtraction, otherwise the loop can cycle
    g = x;
    s = 1;
    t = 0;
  }
  xg = x / g;
  yg = y / g;
}

Integer rational_det(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return Integer(det.get_num());
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Integer minor(const IntMatrix& a, const std::vector<std::size_t>& rows,
              const std::vector<std::size_t>& cols) {
  std::vector<std::vector<mpq_class>> m(rows.size(),
                                        std::vector<mpq_class>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m[i][j] = a(rows[i], cols[j]);
  return rational_det(std::move(m));
}

}  // namespace

IntVector naive_invariant_factors(const IntMatrix& a) {
  Dense m = dense(a);
  const std::size_t rows = a.rows(), cols = a.cols();
  Integer s, t, g, xg, yg;
  std::vector<Integer> diag;
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = k; i < rows && pi == rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (m[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == rows) break;
    std::swap(m[k], m[pi]);
    for (auto& r : m) std::swap(r[k], r[pj]);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (m[i][k] == 0) continue;
        euclid_pair(m[k][k], m[i][k], s, t, g, xg, yg);
        for (std::size_t j = k; j < cols; ++j) {
          Integer top = s * m[k][j] + t * m[i][j];
          Integer bottom = -yg * m[k][j] + xg * m[i][j];
          m[k][j] = top;
          m[i][j] = bottom;
        }
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (m[k][j] == 0) continue;
        euclid_pair(m[k][k], m[k][j], s, t, g, xg, yg);
        for (std::size_t i = k; i < rows; ++i) {
          Integer left = s * m[i][k] + t * m[i][j];
          Integer right = -yg * m[i][k] + xg * m[i][j];
          m[i][k] = left;
          m[i][j] = right;
        }
        dirty = true;
      }
      for (std::size_t i = k + 1; i < rows; ++i)
        if (m[i][k] != 0) dirty = true;
    }
    diag.push_back(abs(m[k][k]));
  }
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Integer gg = gcd(diag[i], diag[j]);
      Integer l = lcm(diag[i], diag[j]);
      diag[i] = gg;
      diag[j] = l;
    }
  return diag;
}

IntVector minors_invariant_factors(const IntMatrix& a) {
  IntVector out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    Integer d = 0;
    for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& r) {
      for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& c) {
        d = gcd(d, minor(a, r, c));
      });
    });
    if (d == 0) break;
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

std::size_t rational_rank(const IntMatrix& a) {
  std::vector<std::vector<mpq_class>> m(a.rows(),
                                        std::vector<mpq_class>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && m[p][c] == 0) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < a.cols(); ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::size_t rank_mod_p(const IntMatrix& a, unsigned long p) {
  std::vector<std::vector<unsigned long>> m(a.rows(),
                                            std::vector<unsigned long>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m[i][j] = mpz_fdiv_ui(a(i, j).get_mpz_t(), p);
  auto inv = [p](unsigned long x) {
    unsigned long r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && m[piv][c] == 0) ++piv;
    if (piv == a.rows()) continue;
    std::swap(m[piv], m[r]);
    unsigned long iv = inv(m[r][c]);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (m[i][c] == 0) continue;
      unsigned long f = m[i][c] * iv % p;
      for (std::size_t j = c; j < a.cols(); ++j)
        m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
    }
    ++r;
  }
  return r;
}

Integer maximal_minor_gcd(const IntMatrix& a) {
  const std::size_t s = a.rows();
  if (s == 0) return 1;
  std::vector<std::size_t> all_rows(s);
  for (std::size_t i = 0; i < s; ++i) all_rows[i] = i;
  Integer d = 0;
  for_each_subset(a.cols(), s, [&](const std::vector<std::size_t>& c) {
    if (d != 1) d = gcd(d, minor(a, all_rows, c));
  });
  return d;
}

bool saturated_mod_p(const IntMatrix& a) {
  Integer d = maximal_minor_gcd(a);
  if (d == 0) throw std::invalid_argument("rows are dependent");
  std::vector<unsigned long> primes;
  for (unsigned long p = 2; d > 1; ++p) {
    if (mpz_probab_prime_p(d.get_mpz_t(), 30)) {
      if (!d.fits_ulong_p()) throw std::invalid_argument("prime too large");
      primes.push_back(d.get_ui());
      break;
    }
    if (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
      primes.push_back(p);
      while (mpz_divisible_ui_p(d.get_mpz_t(), p)) d /= p;
    }
  }
  for (unsigned long p : primes)
    if (rank_mod_p(a, p) != a.rows()) return false;
  return true;
}

std::vector<Integer> h1_by_counting(const specialred::Subgroup& h,
                                    const specialred::GLattice& m) {
  const std::size_t r = m.rank();
  const std::size_t n = h.order();
  if (r == 0) return {};
  std::vector<IntMatrix> acts;
  IntMatrix stacked(r, 0);
  for (std::size_t e : h.elements()) {
    acts.push_back(m.action(e));
    stacked = stacked.hstack(m.action(e) - IntMatrix::identity(r));
  }
  const std::size_t fixed_rank = r - rational_rank(stacked);

  // prime -> multiset of exponents of the primary cyclic factors
  std::map<unsigned long, std::vector<unsigned>> primary;
  std::size_t rest = n;
  for (unsigned long p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    std::vector<unsigned> at_least;  // at_least[k-1]: factors of order >= p^k
    Integer prev_count = 1;
    unsigned long mm = 1;
    for (unsigned k = 1; k <= e; ++k) {
      mm *= p;
      std::vector<unsigned long> v(r, 0);
      Integer count = 0;
      for (;;) {
        bool fixed = true;
        for (const auto& a : acts) {
          for (std::size_t j = 0; j < r && fixed; ++j) {
            Integer s = 0;
            for (std::size_t i = 0; i < r; ++i) s += a(i, j) * v[i];
            if (mpz_fdiv_ui(s.get_mpz_t(), mm) != v[j]) fixed = false;
          }
          if (!fixed) break;
        }
        if (fixed) ++count;
        std::size_t i = 0;
        while (i < r && ++v[i] == mm) v[i++] = 0;
        if (i == r) break;
      }
      Integer denom;
      mpz_ui_pow_ui(denom.get_mpz_t(), mm, fixed_rank);
      if (count % denom != 0) throw std::logic_error("fixed-point count not divisible");
      Integer torsion_count = count / denom;
      Integer ratio = torsion_count / prev_count;
      unsigned f = 0;
      while (ratio > 1) {
        if (ratio % p != 0) throw std::logic_error("count is not a prime power");
        ratio /= p;
        ++f;
      }
      at_least.push_back(f);
      prev_count = torsion_count;
    }
    for (unsigned k = 1; k <= e; ++k) {
      unsigned here = at_least[k - 1] - (k < e ? at_least[k] : 0);
      for (unsigned c = 0; c < here; ++c) primary[p].push_back(k);
    }
  }
  std::size_t len = 0;
  for (auto& [p, ks] : primary) {
    std::sort(ks.rbegin(), ks.rend());
    len = std::max(len, ks.size());
  }
  std::vector<Integer> out(len, 1);
  for (const auto& [p, ks] : primary)
    for (std::size_t i = 0; i < ks.size(); ++i) {
      Integer pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), p, ks[i]);
      out[len - 1 - i] *= pk;
    }
  return out;
}

std::vector<specialred::Permutation> brute_closure(
    std::size_t degree, const std::vector<specialred::Permutation>& gens) {
  specialred::Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::set<specialred::Permutation> all{id};
  all.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<specialred::Permutation> cur(all.begin(), all.end());
    for (const auto& a : cur)
      for (const auto& b : cur) {
        specialred::Permutation c(degree);
        for (std::size_t i = 0; i < degree; ++i) c[i] = b[a[i]];
        if (all.insert(c).second) grew = true;
      }
  }
  return {all.begin(), all.end()};
}

std::size_t count_subgroups_exhaustive(const specialred::FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > 12) throw std::invalid_argument("group too large for exhaustion");
  std::size_t count = 0;
  // bit i of mask: element i + 1 (identity always in)
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    auto in = [&](std::size_t e) { return e == 0 || ((mask >> (e - 1)) & 1u); };
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if (!in(a)) continue;
      for (std::size_t b = 0; b < n; ++b)
        if (in(b) && !in(g.multiply(a, b))) {
          closed = false;
          break;
        }
    }
    if (closed) ++count;
  }
  return count;
}

IntMatrix random_matrix(std::size_t rows, std::size_t cols, long bound,
                        std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

std::pair<IntMatrix, IntMatrix> random_unimodular(std::size_t n,
                                                  std::mt19937_64& rng) {
  IntMatrix u = IntMatrix::identity(n), inv = IntMatrix::identity(n);
  if (n < 2) return {u, inv};
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> c(-2, 2);
  for (std::size_t step = 0; step < 3 * n; ++step) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) {
      u.negate_row(i);
      inv.negate_col(i);
      continue;
    }
    Integer f = c(rng);
    // u <- E u with E = I + f e_ij; inv <- inv E^-1
    u.add_row_multiple(i, j, f);
    inv.add_col_multiple(j, i, -f);
  }
  return {u, inv};
}

}  // namespace oracle
