#ifndef WALKDET_POLY_HPP
#define WALKDET_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <walkdet/bigint.hpp>
#include <walkdet/matrix.hpp>

namespace walkdet {

// Univariate polynomial over BigInt, coefficient of x^i at index i, no
// trailing zero coefficients. The zero polynomial has an empty coefficient
// vector; its degree() reports -1, standing in for "minus infinity".
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<BigInt> coeffs_low_to_high) : coeffs_(coeffs_low_to_high) {
    normalize();
  }
  explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static IntPoly constant(BigInt c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
  }

  static IntPoly monomial(std::size_t k, BigInt c = BigInt(1)) {
    IntPoly p;
    if (c != 0) {
      p.coeffs_.assign(k + 1, BigInt(0));
      p.coeffs_[k] = std::move(c);
    }
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  const BigInt& coeff(std::size_t i) const {
    static const BigInt zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
  }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  const BigInt& leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  BigInt eval(const BigInt& t) const {
    BigInt acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
    return acc;
  }

  bool operator==(const IntPoly&) const = default;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(c));
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(c));
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(c));
  }

  friend IntPoly operator*(const BigInt& s, const IntPoly& p) {
    std::vector<BigInt> c = p.coeffs_;
    for (auto& x : c) x *= s;
    return IntPoly(std::move(c));
  }

  friend IntPoly operator-(const IntPoly& p) { return BigInt(-1) * p; }

  // Rendered highest degree first, e.g. "x^4 - 4x^2 - 2x + 1", "-l^2".
  std::string to_string(std::string_view var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const BigInt& c = coeffs_[i];
      if (c == 0) continue;
      const BigInt a = abs_big(c);
      if (first) {
        if (c < 0) out << "-";
        first = false;
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      if (i == 0 || a != 1) out << a.str();
      if (i > 0) {
        out << var;
        if (i > 1) out << "^" << i;
      }
    }
    return out.str();
  }

 private:
  std::vector<BigInt> coeffs_;

  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
};

// det(xI - m), monic of degree order(m), by the Faddeev-LeVerrier recurrence:
//   N_1 = I, c_{n-k} = -tr(m N_k)/k, N_{k+1} = m N_k + c_{n-k} I.
// The division by k is exact over the integers (Newton's identities); an
// inexact division is reported as an internal arithmetic failure.
// charpoly of the 0x0 matrix is the constant 1.
inline IntPoly charpoly(const IntMatrix& m) {
  const std::size_t n = m.order();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix work(n);  // m * N_{k-1}, with N_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) work(i, i) += c[n - k + 1];
    work = mat_mul(m, work);
    c[n - k] = exact_div(-work.trace(), BigInt(k), "charpoly");
  }
  return IntPoly(std::move(c));
}

// Sylvester matrix of f (degree n >= 1) and g (degree m >= 1): deg(g) rows of
// f's coefficients from the leading one down, each shifted right by one, then
// deg(f) rows of g's likewise; (n+m) x (n+m).
inline IntMatrix sylvester_matrix(const IntPoly& f, const IntPoly& g) {
  const long n = f.degree(), m = g.degree();
  if (n < 1 || m < 1) throw std::invalid_argument("sylvester_matrix: both degrees must be >= 1");
  IntMatrix s(static_cast<std::size_t>(n + m));
  for (long r = 0; r < m; ++r)
    for (long t = 0; t <= n; ++t) s(r, r + t) = f.coeff(static_cast<std::size_t>(n - t));
  for (long r = 0; r < n; ++r)
    for (long t = 0; t <= m; ++t) s(m + r, r + t) = g.coeff(static_cast<std::size_t>(m - t));
  return s;
}

// Res(f, g) = lc(f)^deg(g) * prod g(alpha_i) over the roots alpha_i of f,
// evaluated as the Sylvester determinant. Nonzero iff gcd(f, g) = 1 over Q.
// Degenerate conventions: Res against a nonzero constant b0 is b0^deg(other);
// Res of a zero polynomial against anything of degree >= 1 is 0; two nonzero
// constants give 1; two zero polynomials are undefined.
inline BigInt sylvester_resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("undefined resultant (both zero)");
  if (f.is_zero()) return g.degree() >= 1 ? BigInt(0) : BigInt(1);
  if (g.is_zero()) return f.degree() >= 1 ? BigInt(0) : BigInt(1);
  if (g.degree() == 0) return pow_big(g.coeff(0), static_cast<unsigned long>(f.degree()));
  if (f.degree() == 0) return pow_big(f.coeff(0), static_cast<unsigned long>(g.degree()));
  return det_bareiss(sylvester_matrix(f, g));
}

// Unique polynomial of degree <= degree_bound through the given points,
// recovered by Newton divided differences in exact rational arithmetic.
// The result must come out with integer coefficients and within the degree
// bound; a violation means the caller's evaluations or bound are wrong.
inline IntPoly interpolate_exact(const std::vector<std::pair<BigInt, BigInt>>& points,
                                 std::size_t degree_bound) {
  const std::size_t k = points.size();
  if (k < degree_bound + 1) {
    throw std::invalid_argument("interpolate_exact: need at least degree_bound + 1 points");
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("interpolate_exact: duplicate evaluation points");

  std::vector<Rat> coef(k);
  for (std::size_t i = 0; i < k; ++i) coef[i] = Rat(points[i].second);
  for (std::size_t level = 1; level < k; ++level) {
    for (std::size_t i = k; i-- > level;) {
      coef[i] = (coef[i] - coef[i - 1]) / Rat(points[i].first - points[i - level].first);
    }
  }

  // Expand the Newton form over Q: P <- P*(x - t_i) + coef[i].
  std::vector<Rat> acc{coef[k - 1]};
  for (std::size_t i = k - 1; i-- > 0;) {
    std::vector<Rat> next(acc.size() + 1);
    const Rat t(points[i].first);
    for (std::size_t d = 0; d < acc.size(); ++d) {
      next[d + 1] += acc[d];
      next[d] -= acc[d] * t;
    }
    next[0] += coef[i];
    acc = std::move(next);
  }

  std::vector<BigInt> out(acc.size());
  for (std::size_t d = 0; d < acc.size(); ++d) {
    if (boost::multiprecision::denominator(acc[d]) != 1) {
      throw std::invalid_argument("interpolate_exact: non-integer coefficient at degree " +
                                  std::to_string(d));
    }
    out[d] = boost::multiprecision::numerator(acc[d]);
  }
  IntPoly result(std::move(out));
  if (result.degree() > static_cast<long>(degree_bound)) {
    throw std::invalid_argument("interpolate_exact: interpolant exceeds the degree bound");
  }
  return result;
}

// If p == +x^k or -x^k returns k, otherwise nothing. Zero returns nothing.
inline std::optional<std::size_t> is_pm_monomial(const IntPoly& p) {
  if (p.is_zero()) return std::nullopt;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  if (c.back() != 1 && c.back() != -1) return std::nullopt;
  return c.size() - 1;
}

}  // namespace walkdet

#endif  // WALKDET_POLY_HPP
