#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace eccspec {

// Arbitrary-precision integer and normalized rational (GMP).
using Integer = mpz_class;
using Rational = mpq_class;

Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool fits_int64(const Integer& value) {
  return mpz_fits_slong_p(value.get_mpz_t()) != 0;
}

inline std::int64_t to_int64(const Integer& value) {
  return static_cast<std::int64_t>(mpz_get_si(value.get_mpz_t()));
}

inline Integer from_int64(std::int64_t value) {
  return Integer(static_cast<long>(value));
}

}  // namespace eccspec
