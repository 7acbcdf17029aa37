#pragma once

#include "tetra/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tetra {

// Dense row-major rational matrix. Sizes here never exceed 20, so no
// attempt is made at blocking or sparsity.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transposed() const;
  RationalMatrix submatrix(const std::vector<std::size_t>& idx) const;  // principal

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

  bool is_symmetric() const;
  bool is_integral() const;

  Rational determinant() const;
  std::size_t rank() const;
  std::optional<RationalMatrix> inverse() const;
  // Basis of the right null space, one vector per column of the result.
  std::vector<std::vector<Rational>> null_space() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace tetra
