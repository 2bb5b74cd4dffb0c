#pragma once

// Dense exact matrices over a RingContext. Sizes here are small (n <= ~16),
// so everything is a row-major std::vector<Element>.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cogredient/error.hpp"
#include "cogredient/localring.hpp"

namespace cogredient {

class Matrix {
 public:
  /// rows x cols zero matrix. 0 x 0 is allowed and acts as the neutral
  /// element of direct_sum.
  Matrix(Ring ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (!ring_) throw MismatchError("matrix: null ring");
    data_.assign(rows * cols, ring_->zero());
  }

  static Matrix identity(const Ring& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring->one();
    return m;
  }

  static Matrix diagonal(const Ring& ring, std::span<const Element> entries) {
    Matrix m(ring, entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }

  /// Convenience for constant-coefficient entries, e.g. {{1, 3}, {3, 2}}.
  static Matrix from_ints(const Ring& ring, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const std::size_t n_rows = rows.size();
    const std::size_t n_cols = n_rows == 0 ? 0 : rows.begin()->size();
    Matrix m(ring, n_rows, n_cols);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_cols) throw MismatchError("matrix: ragged rows");
      std::size_t j = 0;
      for (std::int64_t v : row) m(i, j++) = ring->from_int(v);
      ++i;
    }
    return m;
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i + 1; j < cols_; ++j) {
        if ((*this)(i, j) != (*this)(j, i)) return false;
      }
    }
    return true;
  }

  bool is_diagonal() const {
    if (!is_square()) return false;
    const Element zero = ring_->zero();
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i != j && (*this)(i, j) != zero) return false;
      }
    }
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

namespace detail {
inline void require_same_ring(const Matrix& a, const Matrix& b, const char* op) {
  if (a.ring() != b.ring()) throw MismatchError(std::string(op) + ": matrices over different rings");
}
inline void require_square(const Matrix& a, const char* op) {
  if (!a.is_square()) throw MismatchError(std::string(op) + ": matrix is not square");
}
}  // namespace detail

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  detail::require_same_ring(a, b, "mat_mul");
  if (a.cols() != b.rows()) throw MismatchError("mat_mul: inner dimensions differ");
  const RingContext& ring = *a.ring();
  Matrix c(a.ring(), a.rows(), b.cols());
  const Element zero = ring.zero();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == zero) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) = ring.add(c(i, j), ring.mul(a(i, k), b(k, j)));
      }
    }
  }
  return c;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

inline Matrix operator*(const Element& c, const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = c * a(i, j);
  }
  return out;
}

inline Matrix transpose(const Matrix& a) {
  Matrix t(a.ring(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

/// Characteristic-polynomial coefficients by Berkowitz's division-free
/// recursion: v[0] = 1, and det(A) = (-1)^n v[n].
inline std::vector<Element> berkowitz_vector(const Matrix& a) {
  const RingContext& ring = *a.ring();
  const std::size_t n = a.rows();
  if (n == 0) return {ring.one()};
  if (n == 1) return {ring.one(), ring.neg(a(0, 0))};

  Matrix sub(a.ring(), n - 1, n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) sub(i - 1, j - 1) = a(i, j);
  }
  // Toeplitz column: 1, -a00, -R C, -R A C, -R A^2 C, ...
  std::vector<Element> diags{ring.one(), ring.neg(a(0, 0))};
  std::vector<Element> col(n - 1);
  for (std::size_t i = 1; i < n; ++i) col[i - 1] = a(i, 0);
  for (std::size_t step = 0; step + 1 < n; ++step) {
    Element dot = ring.zero();
    for (std::size_t j = 1; j < n; ++j) dot = ring.add(dot, ring.mul(a(0, j), col[j - 1]));
    diags.push_back(ring.neg(dot));
    std::vector<Element> next(n - 1, ring.zero());
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = 0; j + 1 < n; ++j) next[i] = ring.add(next[i], ring.mul(sub(i, j), col[j]));
    }
    col = std::move(next);
  }

  const std::vector<Element> inner = berkowitz_vector(sub);  // length n
  std::vector<Element> out(n + 1, ring.zero());
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j < n && j <= i; ++j) out[i] = ring.add(out[i], ring.mul(diags[i - j], inner[j]));
  }
  return out;
}

/// Exact determinant; division-free, so valid with zero divisors present.
inline Element det(const Matrix& a) {
  detail::require_square(a, "det");
  const std::vector<Element> v = berkowitz_vector(a);
  const Element& last = v.back();
  return a.rows() % 2 == 0 ? last : a.ring()->neg(last);
}

inline bool is_invertible(const Matrix& a) { return a.is_square() && a.ring()->is_unit(det(a)); }

/// Gauss-Jordan with unit pivots. Over a local ring each column of an
/// invertible matrix has a unit entry at or below the diagonal after the
/// previous columns have been cleared.
inline Matrix inverse(const Matrix& a) {
  detail::require_square(a, "inverse");
  const RingContext& ring = *a.ring();
  const std::size_t n = a.rows();
  Matrix work = a;
  Matrix inv_m = Matrix::identity(a.ring(), n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !ring.is_unit(work(pivot, col))) ++pivot;
    if (pivot == n) throw DomainError("inverse: matrix is not invertible");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv_m(pivot, j), inv_m(col, j));
      }
    }
    const Element scale = ring.inv(work(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) = ring.mul(scale, work(col, j));
      inv_m(col, j) = ring.mul(scale, inv_m(col, j));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const Element factor = work(i, col);
      if (factor == ring.zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work(i, j) = ring.sub(work(i, j), ring.mul(factor, work(col, j)));
        inv_m(i, j) = ring.sub(inv_m(i, j), ring.mul(factor, inv_m(col, j)));
      }
    }
  }
  return inv_m;
}

/// A (+) B: block-diagonal assembly.
inline Matrix direct_sum(const Matrix& a, const Matrix& b) {
  detail::require_same_ring(a, b, "direct_sum");
  Matrix out(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return out;
}

/// P S P^T.
inline Matrix congruence_apply(const Matrix& p, const Matrix& s) {
  detail::require_same_ring(p, s, "congruence_apply");
  detail::require_square(p, "congruence_apply");
  detail::require_square(s, "congruence_apply");
  if (p.rows() != s.rows()) throw MismatchError("congruence_apply: dimension mismatch");
  return p * s * transpose(p);
}

inline std::ostream& operator<<(std::ostream& os, const Matrix& a) {
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? "," : "") << a(i, j);
    os << ']';
  }
  return os << ']';
}

}  // namespace cogredient
