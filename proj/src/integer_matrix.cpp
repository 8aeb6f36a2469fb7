#include "cubuland/integer_matrix.hpp"

#include "cubuland/error.hpp"

#include <utility>

namespace cubuland {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    require(row.size() == cols_, "ragged matrix literal");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Integer> IntegerMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  require(a.cols() == b.rows(), "matrix dimension mismatch");
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::vector<Integer> operator*(const IntegerMatrix& a, const std::vector<Integer>& x) {
  require(a.cols() == x.size(), "matrix/vector dimension mismatch");
  std::vector<Integer> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * x[k];
  return out;
}

namespace {

// Elementary operations applied simultaneously to the working matrix and the
// accumulated transforms.
struct Reducer {
  IntegerMatrix d, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d(i, c), d(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d(r, i), d(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  // row_dst += k * row_src
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(dst, c) += k * d(src, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(dst, c) += k * u(src, c);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t r = 0; r < d.rows(); ++r) d(r, dst) += k * d(r, src);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, dst) += k * v(r, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) = -d(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  Reducer r{input, IntegerMatrix::identity(m), IntegerMatrix::identity(n)};

  std::size_t t = 0;
  for (; t < m && t < n; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      bool found = false;
      std::size_t pi = t, pj = t;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (r.d(i, j) != 0 && (!found || abs(r.d(i, j)) < best)) {
            found = true;
            best = abs(r.d(i, j));
            pi = i;
            pj = j;
          }
      if (!found) goto done;
      r.swap_rows(t, pi);
      r.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (r.d(i, t) == 0) continue;
        Integer q = r.d(i, t) / r.d(t, t);
        r.add_row(i, t, -q);
        if (r.d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (r.d(t, j) == 0) continue;
        Integer q = r.d(t, j) / r.d(t, t);
        r.add_col(j, t, -q);
        if (r.d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into the pivot row and retry
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (r.d(i, j) % r.d(t, t) != 0) {
            r.add_row(t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (r.d(t, t) < 0) r.negate_row(t);
  }
done:
  SmithForm out;
  out.left = std::move(r.u);
  out.right = std::move(r.v);
  out.diagonal = std::move(r.d);
  for (std::size_t i = 0; i < m && i < n; ++i) {
    if (out.diagonal(i, i) == 0) break;
    out.invariants.push_back(out.diagonal(i, i));
  }
  out.rank = out.invariants.size();
  return out;
}

IntegerMatrix integer_kernel(const IntegerMatrix& a) {
  SmithForm snf = smith_normal_form(a);
  const std::size_t n = a.cols();
  IntegerMatrix basis(n, n - snf.rank);
  for (std::size_t j = snf.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) basis(i, j - snf.rank) = snf.right(i, j);
  return basis;
}

}  // namespace cubuland
