#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace tetraising {

/// Arbitrary-precision rational. GMP keeps every arithmetic result in
/// canonical form (denominator > 0, fully reduced).
using ExactRational = mpq_class;
using BigInt = mpz_class;
using Complex = std::complex<double>;

/// Parses "p", "-p" or "p/q" into a canonical rational.
ExactRational parse_rational(std::string_view text);

inline ExactRational make_rational(long num, long den = 1) {
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const ExactRational& r) { return r.get_str(); }

inline double to_double(const ExactRational& r) { return r.get_d(); }

/// 2^k for any integer k, exactly.
ExactRational pow2(int k);

}  // namespace tetraising
