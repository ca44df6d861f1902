#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mfhh {

/// Arbitrary-precision integer. Expression templates are off so the type
/// behaves as a plain value inside Eigen matrices.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Exact rational, always kept in lowest terms with positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Floor division for any signed integral-like type (rounds toward -inf).
template <typename T>
T floor_div(const T& a, const T& b) {
  T q = a / b;
  T r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

template <typename T>
T ceil_div(const T& a, const T& b) {
  return -floor_div<T>(-a, b);
}

/// Nonnegative remainder in [0, |m|).
template <typename T>
T mod_floor(const T& a, const T& m) {
  T r = a % m;
  if (r < 0) r += (m < 0 ? -m : m);
  return r;
}

inline std::int64_t to_int64(const Integer& v) {
  if (v > Integer(INT64_MAX) || v < Integer(INT64_MIN))
    throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
  return v.convert_to<std::int64_t>();
}

/// Fractional part of q, i.e. the representative of q mod 1 in [0, 1).
inline Rational frac(const Rational& q) {
  Integer n = boost::multiprecision::numerator(q);
  Integer d = boost::multiprecision::denominator(q);
  return Rational(mod_floor(n, d), d);
}

}  // namespace mfhh
