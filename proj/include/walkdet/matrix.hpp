#ifndef WALKDET_MATRIX_HPP
#define WALKDET_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <walkdet/bigint.hpp>

namespace walkdet {

// Dense square matrix over BigInt. Orders in this library stay small
// (n*m up to a few hundred), so no sparsity machinery.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t order) : n_(order), entries_(order * order) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  // diag(0,...,0,1,0,...,0) with the single 1 at position v.
  static IntMatrix unit_diag(std::size_t n, std::size_t v) {
    if (v >= n) throw std::out_of_range("unit_diag: index out of range");
    IntMatrix m(n);
    m(v, v) = 1;
    return m;
  }

  std::size_t order() const { return n_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  bool operator==(const IntMatrix&) const = default;

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  BigInt trace() const {
    BigInt t(0);
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> entries_;
};

// a + c*b entrywise.
inline IntMatrix mat_add_scaled(const IntMatrix& a, const IntMatrix& b, const BigInt& c) {
  if (a.order() != b.order()) throw std::invalid_argument("mat_add_scaled: order mismatch");
  IntMatrix out = a;
  if (c == 0) return out;
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (b(i, j) != 0) out(i, j) += c * b(i, j);
  return out;
}

inline IntMatrix scalar_mul(const IntMatrix& m, const BigInt& c) {
  IntMatrix out = m;
  const std::size_t n = m.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) *= c;
  return out;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.order() != b.order()) throw std::invalid_argument("mat_mul: order mismatch");
  const std::size_t n = a.order();
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

inline std::vector<BigInt> mat_vec(const IntMatrix& m, const std::vector<BigInt>& v) {
  const std::size_t n = m.order();
  if (v.size() != n) throw std::invalid_argument("mat_vec: size mismatch");
  std::vector<BigInt> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != 0) out[i] += m(i, j) * v[j];
  return out;
}

// Kronecker product with row-major block ordering:
// (a (x) b)[i*q+k, j*q+l] = a[i,j] * b[k,l], q = order(b).
inline IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t p = a.order(), q = b.order();
  IntMatrix out(p * q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < q; ++k)
        for (std::size_t l = 0; l < q; ++l)
          if (b(k, l) != 0) out(i * q + k, j * q + l) = a(i, j) * b(k, l);
    }
  return out;
}

// (n-1)x(n-1) matrix with row v and column v removed.
inline IntMatrix delete_row_col(const IntMatrix& m, std::size_t v) {
  const std::size_t n = m.order();
  if (v >= n) throw std::out_of_range("delete_row_col: index out of range");
  IntMatrix out(n - 1);
  for (std::size_t i = 0, oi = 0; i < n; ++i) {
    if (i == v) continue;
    for (std::size_t j = 0, oj = 0; j < n; ++j) {
      if (j == v) continue;
      out(oi, oj) = m(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

// Exact determinant by Bareiss fraction-free elimination. Pivoting swaps in
// the first row with a nonzero entry in the pivot column; an all-zero column
// short-circuits to 0. Every division is exact (Sylvester's identity), and
// that is checked. det of the 0x0 matrix is 1 so that product and resultant
// identities degenerate gracefully.
inline BigInt det_bareiss(IntMatrix m) {
  const std::size_t n = m.order();
  if (n == 0) return BigInt(1);
  int sign = 1;
  BigInt prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return BigInt(0);
    if (p != k) {
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev, "det_bareiss");
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign < 0 ? BigInt(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

}  // namespace walkdet

#endif  // WALKDET_MATRIX_HPP
