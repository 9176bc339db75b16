#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bautin/errors.hpp"
#include "bautin/scalar.hpp"

namespace bautin {

// Row-major dense matrix.
template <class S>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const S& fill = S(0L))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

namespace detail {

inline bool better_pivot(const Rational& cand, const Rational& best) {
  return best.is_zero() && !cand.is_zero();
}
inline bool better_pivot(const BigReal& cand, const BigReal& best) {
  return abs(cand) > abs(best);
}

}  // namespace detail

// Gaussian elimination with row pivoting (largest magnitude for BigReal, first
// nonzero for exact rationals).  Throws InternalError on a singular system.
template <FieldScalar S>
std::vector<S> solve_dense(DenseMatrix<S> a, std::vector<S> b) {
  const std::size_t n = a.rows();
  if (!a.square() || b.size() != n) throw UsageError("solve_dense: shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (detail::better_pivot(a(r, col), a(piv, col))) piv = r;
    if (is_zero(a(piv, col))) throw InternalError("solve_dense: singular system");
    a.swap_rows(piv, col);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      const S factor = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) = a(r, c) - factor * a(col, c);
      b[r] = b[r] - factor * b[col];
    }
  }
  std::vector<S> x(n, b.empty() ? S(0L) : b[0] * S(0L));
  for (std::size_t i = n; i-- > 0;) {
    S acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc = acc - a(i, c) * x[c];
    x[i] = acc / a(i, i);
  }
  return x;
}

}  // namespace bautin
