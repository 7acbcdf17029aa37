#include "tetra/matrix.hpp"

#include "tetra/errors.hpp"

#include <utility>

namespace tetra {

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

RationalMatrix RationalMatrix::submatrix(const std::vector<std::size_t>& idx) const {
  RationalMatrix s(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = (*this)(idx[i], idx[j]);
  return s;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch");
  RationalMatrix p(a.rows_, b.cols_);
  Rational t;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        t = aik * b(k, j);
        p(i, j) += t;
      }
    }
  }
  return p;
}

RationalMatrix operator-(const RationalMatrix& a) {
  RationalMatrix n = a;
  for (auto& x : n.data_) x = -x;
  return n;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool RationalMatrix::is_integral() const {
  for (const auto& x : data_)
    if (x.get_den() != 1) return false;
  return true;
}

namespace {

// Row-reduces in place; returns the pivot columns and the sign/scale of
// the determinant accumulated from swaps.
std::vector<std::size_t> row_reduce(RationalMatrix& m, int* swaps) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
      if (swaps) ++*swaps;
    }
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      Rational f = m(r, col) / m(row, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_) throw DomainError("determinant of non-square matrix");
  RationalMatrix m = *this;
  int swaps = 0;
  auto pivots = row_reduce(m, &swaps);
  if (pivots.size() < rows_) return 0;
  Rational d = (swaps % 2) ? -1 : 1;
  for (std::size_t i = 0; i < rows_; ++i) d *= m(i, i);
  return d;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix m = *this;
  return row_reduce(m, nullptr).size();
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (rows_ != cols_) throw DomainError("inverse of non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && aug(p, col) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != col)
      for (std::size_t c = 0; c < 2 * n; ++c) std::swap(aug(p, c), aug(col, c));
    Rational inv = 1 / aug(col, col);
    for (std::size_t c = 0; c < 2 * n; ++c) aug(col, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug(r, col) == 0) continue;
      Rational f = aug(r, col);
      for (std::size_t c = 0; c < 2 * n; ++c) aug(r, c) -= f * aug(col, c);
    }
  }
  RationalMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

std::vector<std::vector<Rational>> RationalMatrix::null_space() const {
  RationalMatrix m = *this;
  auto pivots = row_reduce(m, nullptr);
  // Back-substitute to reduced row echelon form.
  for (std::size_t i = pivots.size(); i-- > 0;) {
    const std::size_t pc = pivots[i];
    Rational inv = 1 / m(i, pc);
    for (std::size_t c = 0; c < cols_; ++c) m(i, c) *= inv;
    for (std::size_t r = 0; r < i; ++r) {
      if (m(r, pc) == 0) continue;
      Rational f = m(r, pc);
      for (std::size_t c = 0; c < cols_; ++c) m(r, c) -= f * m(i, c);
    }
  }
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace tetra
