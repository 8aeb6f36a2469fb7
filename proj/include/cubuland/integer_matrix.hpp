#pragma once

#include "cubuland/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace cubuland {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> column(std::size_t c) const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
std::vector<Integer> operator*(const IntegerMatrix& a, const std::vector<Integer>& x);

/// left * input * right == diagonal, with left/right unimodular and the
/// nonzero diagonal entries d_0 | d_1 | ... positive.
struct SmithForm {
  IntegerMatrix left;
  IntegerMatrix diagonal;
  IntegerMatrix right;
  std::vector<Integer> invariants;  // nonzero diagonal entries, in order
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntegerMatrix& input);

/// Basis of the integer kernel {x : A x = 0}, one basis vector per column.
IntegerMatrix integer_kernel(const IntegerMatrix& a);

}  // namespace cubuland
