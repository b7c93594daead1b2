#include "matrix.hpp"

#include <cassert>
#include <utility>

#include "error.hpp"

namespace llab {
namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Scale each row by the lcm of its denominators. Returns the scale factors.
IntRows integerize(const RationalMatrix& m, std::vector<Integer>* scales = nullptr) {
  IntRows out(m.rows(), std::vector<Integer>(m.cols()));
  if (scales) scales->assign(m.rows(), Integer(1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (const auto& q : m.row(r)) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      mpz_divexact(out[r][c].get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
      out[r][c] *= q.get_num();
    }
    if (scales) (*scales)[r] = l;
  }
  return out;
}

// In-place fraction-free row echelon form. Entries below each pivot are
// zeroed; every intermediate entry is a minor of the input, so the divisions
// by the previous pivot are exact.
struct BareissResult {
  Echelon echelon;
  int sign = 1;
  Integer last_pivot = 1;
};

BareissResult bareiss(IntRows& a, std::size_t cols) {
  BareissResult res;
  const std::size_t rows = a.size();
  Integer prev = 1;
  Integer tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      res.sign = -res.sign;
    }
    const Integer& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const bool lead_zero = a[i][c] == 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        // a[i][j] = (piv * a[i][j] - a[i][c] * a[r][j]) / prev
        mpz_mul(tmp.get_mpz_t(), piv.get_mpz_t(), a[i][j].get_mpz_t());
        if (!lead_zero) {
          mpz_submul(tmp.get_mpz_t(), a[i][c].get_mpz_t(), a[r][j].get_mpz_t());
        }
        assert(mpz_divisible_p(tmp.get_mpz_t(), prev.get_mpz_t()));
        mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    res.echelon.pivot_columns.push_back(c);
    ++r;
  }
  res.echelon.rank = r;
  res.last_pivot = prev;
  return res;
}

// Reduced row echelon form over Q, used where exact quotients are needed.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Rational f;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<Rational> RationalMatrix::apply(std::span<const Rational> v) const {
  require(v.size() == cols_, "matrix-vector dimension mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  require(a.cols() == b.rows(), "matrix product dimension mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Echelon echelon(const RationalMatrix& m) {
  IntRows a = integerize(m);
  return bareiss(a, m.cols()).echelon;
}

std::size_t rank(const RationalMatrix& m) { return echelon(m).rank; }

Rational determinant(const RationalMatrix& m) {
  require(m.rows() == m.cols(), "determinant of a non-square matrix");
  if (m.rows() == 0) return Rational(1);
  std::vector<Integer> scales;
  IntRows a = integerize(m, &scales);
  const BareissResult res = bareiss(a, m.cols());
  if (res.echelon.rank < m.rows()) return Rational(0);
  Integer denom = 1;
  for (const auto& s : scales) denom *= s;
  Rational det(res.last_pivot * res.sign, denom);
  det.canonicalize();
  return det;
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  RationalMatrix red = m;
  const auto pivots = rref(red);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix inverse(const RationalMatrix& m) {
  require(m.rows() == m.cols(), "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots.back() >= n) {
    fail(ErrorKind::InvalidArgument, "matrix is singular");
  }
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace llab
