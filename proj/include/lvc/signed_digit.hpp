#pragma once

// Names of reals: signed-digit streams over {-1,0,1} for [-1,1] and binary
// streams for [0,1]. Digit n carries weight 2^-(n+1), so a prefix of
// length n pins the value to within 2^-n.

#include <cstdint>
#include <stdexcept>

#include "lvc/numeric.hpp"
#include "lvc/stream.hpp"

namespace lvc {

class SignedDigitStream {
 public:
  SignedDigitStream() = default;
  explicit SignedDigitStream(Stream<int> digits) : digits_(std::move(digits)) {}

  int digit(std::size_t n) const {
    int d = digits_[n];
    if (d < -1 || d > 1) throw std::logic_error("signed digit out of range");
    return d;
  }

  const Stream<int>& digits() const { return digits_; }

 private:
  Stream<int> digits_;
};

/// sum_{i<n} d_i 2^-(i+1); the named value lies within 2^-n of it.
inline Dyadic sds_approx(const SignedDigitStream& s, std::size_t n) {
  BigInt m = 0;
  for (std::size_t i = 0; i < n; ++i) m = 2 * m + s.digit(i);
  return Dyadic(m, static_cast<std::int64_t>(n));
}

/// Digit stream of q in [-1,1]: the binary expansion of |q| carrying the sign of q.
inline SignedDigitStream sds_from_rational(const Rational& q) {
  if (q < -1 || q > 1) throw std::invalid_argument("sds_from_rational: value outside [-1,1]");
  const int sgn = sign(q);
  const Rational a = abs(q);
  if (a == 1) return SignedDigitStream(Stream<int>::constant(sgn));
  return SignedDigitStream(Stream<int>([a, sgn](std::size_t n) {
    BigInt scaled = lvc::floor(a * Rational(pow2(static_cast<std::int64_t>(n) + 1)));
    return static_cast<int>(scaled % 2) * sgn;
  }));
}

/// rho_2 of a binary prefix: sum_{i<n} b_i 2^-(i+1).
inline Dyadic binary_approx(const Bits& b, std::size_t n) {
  BigInt m = 0;
  for (std::size_t i = 0; i < n; ++i) m = 2 * m + b[i];
  return Dyadic(m, static_cast<std::int64_t>(n));
}

inline Bits binary_from_rational(const Rational& q) {
  if (q < 0 || q > 1) throw std::invalid_argument("binary_from_rational: value outside [0,1]");
  if (q == 1) return Bits::constant(1);
  return Bits([q](std::size_t n) {
    BigInt scaled = lvc::floor(q * Rational(pow2(static_cast<std::int64_t>(n) + 1)));
    return static_cast<std::uint8_t>(scaled % 2);
  });
}

}  // namespace lvc
