#ifndef WALKDET_BIGINT_HPP
#define WALKDET_BIGINT_HPP

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace walkdet {

// Exact arbitrary-precision integer. Every determinant, resultant and
// polynomial coefficient in this library lives in this type; there is no
// floating point anywhere on a computational path.
using BigInt = boost::multiprecision::cpp_int;

// Exact rational, kept in canonical form (reduced, positive denominator).
using Rat = boost::multiprecision::cpp_rational;

inline BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// base^exp with the empty-product convention pow_big(x, 0) == 1, also for x == 0.
inline BigInt pow_big(const BigInt& base, unsigned long exp) {
  BigInt result(1);
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp > 0) b *= b;
  }
  return result;
}

// Quotient of an exact division. Fraction-free elimination and the
// Faddeev-LeVerrier recurrence divide only when divisibility is guaranteed;
// a nonzero remainder means the arithmetic is broken, so it is fatal.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* context) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw std::logic_error(std::string(context) + ": inexact division, remainder " + r.str());
  }
  return q;
}

}  // namespace walkdet

#endif  // WALKDET_BIGINT_HPP
