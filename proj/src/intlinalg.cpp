#include "specialred/intlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "specialred/errors.hpp"

namespace specialred {

namespace {

int cmpabs(const Integer& a, const Integer& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows,
                               std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("ragged row list");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntVector IntMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

IntVector IntMatrix::column_vector(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    mpz_swap((*this)(a, j).get_mpz_t(), (*this)(b, j).get_mpz_t());
  }
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    mpz_swap((*this)(i, a).get_mpz_t(), (*this)(i, b).get_mpz_t());
  }
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                 const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Integer& s = (*this)(source, j);
    if (sgn(s) != 0) {
      mpz_addmul((*this)(target, j).get_mpz_t(), factor.get_mpz_t(),
                 s.get_mpz_t());
    }
  }
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source,
                                 const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Integer& s = (*this)(i, source);
    if (sgn(s) != 0) {
      mpz_addmul((*this)(i, target).get_mpz_t(), factor.get_mpz_t(),
                 s.get_mpz_t());
    }
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (auto& v : row(r)) v = -v;
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::row_slice(std::size_t row_begin,
                               std::size_t row_end) const {
  IntMatrix s(row_end - row_begin, cols_);
  for (std::size_t i = row_begin; i < row_end; ++i)
    std::copy(row(i).begin(), row(i).end(), s.row(i - row_begin).begin());
  return s;
}

IntMatrix IntMatrix::hstack(const IntMatrix& right) const {
  if (rows_ != right.rows_) throw DimensionMismatch("hstack row mismatch");
  IntMatrix m(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::copy(row(i).begin(), row(i).end(), m.row(i).begin());
    std::copy(right.row(i).begin(), right.row(i).end(),
              m.row(i).begin() + static_cast<std::ptrdiff_t>(cols_));
  }
  return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) throw DimensionMismatch("vstack column mismatch");
  IntMatrix m(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Integer& v) { return sgn(v) == 0; });
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && sgn((*this)(i, j)) != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Integer& bkj = b(k, j);
        if (sgn(bkj) != 0)
          mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
      }
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("matrix sum shape");
  IntMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    c.data_[i] = a.data_[i] + b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("matrix difference shape");
  IntMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    c.data_[i] = a.data_[i] - b.data_[i];
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

IntVector row_times(std::span<const Integer> v, const IntMatrix& a) {
  if (v.size() != a.rows()) throw DimensionMismatch("row vector length");
  IntVector out(a.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(k, j)) != 0)
        mpz_addmul(out[j].get_mpz_t(), v[k].get_mpz_t(), a(k, j).get_mpz_t());
  }
  return out;
}

IntVector times_column(const IntMatrix& a, std::span<const Integer> x) {
  if (x.size() != a.cols()) throw DimensionMismatch("column vector length");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(x[j]) != 0)
        mpz_addmul(out[i].get_mpz_t(), a(i, j).get_mpz_t(), x[j].get_mpz_t());
  return out;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

HermiteDecomposition hnf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  HermiteDecomposition out{a, IntMatrix::identity(m), 0};
  IntMatrix& h = out.form;
  IntMatrix& u = out.transform;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        if (best == m || cmpabs(h(i, c), h(best, c)) < 0) best = i;
      }
      if (best == m) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        q = -q;
        h.add_row_multiple(i, r, q);
        u.add_row_multiple(i, r, q);
        if (sgn(h(i, c)) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (sgn(h(r, c)) == 0) continue;
    if (sgn(h(r, c)) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      q = -q;
      h.add_row_multiple(i, r, q);
      u.add_row_multiple(i, r, q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

namespace {

// Diagonalizes `a` in place. Row operations are mirrored on `left` (any matrix
// with a.rows() rows), column operations on `right` (any matrix with
// a.cols() columns). Deterministic: the same input always yields the same
// sequence of operations.
class SmithEngine {
 public:
  SmithEngine(IntMatrix& a, IntMatrix* left, IntMatrix* right)
      : a_(a), left_(left), right_(right) {}

  void run() {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      auto [p, q] = smallest_in_block(t);
      if (p == m) break;
      swap_rows(t, p);
      swap_cols(t, q);
      reduce_pivot(t);
      if (sgn(a_(t, t)) < 0) negate_row(t);
    }
  }

 private:
  std::pair<std::size_t, std::size_t> smallest_in_block(std::size_t t) const {
    std::size_t bp = a_.rows(), bq = a_.cols();
    for (std::size_t i = t; i < a_.rows(); ++i) {
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const Integer& v = a_(i, j);
        if (sgn(v) == 0) continue;
        if (bp == a_.rows() || cmpabs(v, a_(bp, bq)) < 0) {
          bp = i;
          bq = j;
          if (v == 1 || v == -1) return {bp, bq};
        }
      }
    }
    return {bp, bq};
  }

  void reduce_pivot(std::size_t t) {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    for (;;) {
      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(a_(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
        q = -q;
        add_row(i, t, q);
        if (sgn(a_(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(a_(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
        q = -q;
        add_col(j, t, q);
        if (sgn(a_(t, j)) != 0) clean = false;
      }
      if (!clean) {
        // A remainder is smaller than the pivot; bring the smallest forward.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (sgn(a_(i, t)) != 0 && cmpabs(a_(i, t), a_(bi, bj)) < 0) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(a_(t, j)) != 0 && cmpabs(a_(t, j), a_(bi, bj)) < 0) {
            bi = t;
            bj = j;
          }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Divisibility chain: every later entry must be a multiple of the pivot.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) return;
      add_row(t, bad, Integer(1));
    }
  }

  void swap_rows(std::size_t x, std::size_t y) {
    a_.swap_rows(x, y);
    if (left_) left_->swap_rows(x, y);
  }
  void swap_cols(std::size_t x, std::size_t y) {
    a_.swap_cols(x, y);
    if (right_) right_->swap_cols(x, y);
  }
  void add_row(std::size_t target, std::size_t source, const Integer& f) {
    a_.add_row_multiple(target, source, f);
    if (left_) left_->add_row_multiple(target, source, f);
  }
  void add_col(std::size_t target, std::size_t source, const Integer& f) {
    a_.add_col_multiple(target, source, f);
    if (right_) right_->add_col_multiple(target, source, f);
  }
  void negate_row(std::size_t r) {
    a_.negate_row(r);
    if (left_) left_->negate_row(r);
  }

  IntMatrix& a_;
  IntMatrix* left_;
  IntMatrix* right_;
};

IntVector diagonal_factors(const IntMatrix& s) {
  IntVector out;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) {
    if (sgn(s(i, i)) == 0) break;
    out.push_back(s(i, i));
  }
  return out;
}

}  // namespace

SmithDecomposition snf(const IntMatrix& a) {
  SmithDecomposition out{IntMatrix::identity(a.rows()), a,
                         IntMatrix::identity(a.cols()), {}};
  SmithEngine(out.diag, &out.left, &out.right).run();
  out.invariant_factors = diagonal_factors(out.diag);
  return out;
}

IntVector invariant_factors(const IntMatrix& a) {
  IntMatrix s = a;
  SmithEngine(s, nullptr, nullptr).run();
  return diagonal_factors(s);
}

IntMatrix kernel_basis(const IntMatrix& a) {
  HermiteDecomposition h = hnf(a);
  return h.transform.row_slice(h.rank, a.rows());
}

LinearSolveResult solve_linear_certified(const IntMatrix& a,
                                         std::span<const Integer> b) {
  if (b.size() != a.rows())
    throw DimensionMismatch("right-hand side has " + std::to_string(b.size()) +
                            " entries, matrix has " +
                            std::to_string(a.rows()) + " rows");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix s = a;
  IntMatrix rhs(m, 1);
  for (std::size_t i = 0; i < m; ++i) rhs(i, 0) = b[i];
  IntMatrix v = IntMatrix::identity(n);
  SmithEngine(s, &rhs, &v).run();

  const IntVector factors = diagonal_factors(s);
  const std::size_t r = factors.size();
  std::optional<std::size_t> failing;
  IntVector z(n);
  for (std::size_t i = 0; i < m && !failing; ++i) {
    if (i < r) {
      if (!mpz_divisible_p(rhs(i, 0).get_mpz_t(), factors[i].get_mpz_t()))
        failing = i;
      else
        mpz_divexact(z[i].get_mpz_t(), rhs(i, 0).get_mpz_t(),
                     factors[i].get_mpz_t());
    } else if (sgn(rhs(i, 0)) != 0) {
      failing = i;
    }
  }
  LinearSolveResult result;
  if (!failing) {
    result.solution = times_column(v, z);
    return result;
  }
  // Replay with the left transform to extract the offending row of U.
  SmithDecomposition d = snf(a);
  const std::size_t i = *failing;
  result.certificate = InfeasibilityCertificate{
      d.left.row_vector(i), i < r ? factors[i] : Integer(0)};
  return result;
}

std::optional<IntVector> solve_linear(const IntMatrix& a,
                                      std::span<const Integer> b) {
  return solve_linear_certified(a, b).solution;
}

bool verify_certificate(const IntMatrix& a, std::span<const Integer> b,
                        const InfeasibilityCertificate& cert) {
  if (cert.multiplier.size() != a.rows() || b.size() != a.rows()) return false;
  IntVector ua = row_times(cert.multiplier, a);
  Integer ub = 0;
  for (std::size_t i = 0; i < b.size(); ++i) ub += cert.multiplier[i] * b[i];
  if (sgn(cert.modulus) == 0) {
    return std::all_of(ua.begin(), ua.end(),
                       [](const Integer& x) { return sgn(x) == 0; }) &&
           sgn(ub) != 0;
  }
  for (const auto& x : ua)
    if (!mpz_divisible_p(x.get_mpz_t(), cert.modulus.get_mpz_t())) return false;
  return !mpz_divisible_p(ub.get_mpz_t(), cert.modulus.get_mpz_t());
}

std::optional<IntVector> solve_row_combination(const IntMatrix& basis,
                                               std::span<const Integer> v) {
  if (v.size() != basis.cols())
    throw DimensionMismatch("vector length does not match lattice dimension");
  return solve_linear(basis.transpose(), v);
}

namespace {

// Fraction-free Gaussian elimination; returns rank and, for square input, the
// determinant up to the sign tracked in `sign`.
std::size_t bareiss(IntMatrix& m, int& sign) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer prev = 1;
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      m.swap_rows(p, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = m(i, j) * m(r, c) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const IntMatrix& a) {
  IntMatrix m = a;
  int sign = 1;
  return bareiss(m, sign);
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of non-square");
  if (a.rows() == 0) return 1;
  IntMatrix m = a;
  int sign = 1;
  if (bareiss(m, sign) < a.rows()) return 0;
  return sign * m(a.rows() - 1, a.cols() - 1);
}

bool is_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) return false;
  Integer d = determinant(a);
  return d == 1 || d == -1;
}

bool is_saturated(const IntMatrix& rows) {
  if (rank(rows) < rows.rows())
    throw RankDeficient("saturation test needs independent rows, got rank " +
                        std::to_string(rank(rows)) + " for " +
                        std::to_string(rows.rows()) + " rows");
  IntVector f = invariant_factors(rows);
  return std::all_of(f.begin(), f.end(),
                     [](const Integer& x) { return x == 1; });
}

}  // namespace specialred
