#pragma once

// Exact arithmetic used throughout the library: arbitrary precision
// integers, rationals and dyadic rationals. Nothing in here rounds unless a
// function name says so.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace lvc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(std::int64_t k) {
  if (k < 0) throw std::domain_error("pow2: negative exponent");
  BigInt r = 1;
  r <<= static_cast<unsigned>(k);
  return r;
}

/// Builds num/den in lowest terms with a positive denominator.
inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline Rational rational_pow2(std::int64_t k) {
  return k >= 0 ? Rational(pow2(k)) : make_rational(1, pow2(-k));
}

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Largest integer <= q.
inline BigInt floor(const Rational& q) {
  BigInt n = num(q), d = den(q);
  BigInt r = n / d;  // truncates toward zero
  if (n < 0 && r * d != n) r -= 1;
  return r;
}

inline BigInt ceil(const Rational& q) { return -floor(-q); }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

inline BigInt parse_bigint(std::string_view s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
  BigInt r = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
    r = r * 10 + (s[i] - '0');
  }
  return neg ? BigInt(-r) : r;
}

/// Parses "p/q" or "p".
inline Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(s));
  BigInt d = parse_bigint(s.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("malformed rational: zero denominator in '" + std::string(s) + "'");
  return make_rational(parse_bigint(s.substr(0, slash)), d);
}

/// Formats as "p/q", or "p" for integers.
inline std::string to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

/// A dyadic rational mantissa * 2^-exponent.
///
/// Canonical form: exponent >= 0, and the mantissa is odd whenever the
/// exponent is positive. Zero is stored as 0 * 2^-0. Equality of values is
/// therefore equality of representations.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(BigInt mantissa, std::int64_t exponent) : mantissa_(std::move(mantissa)), exponent_(exponent) {
    normalize();
  }
  Dyadic(long long v) : mantissa_(v) {}  // NOLINT(google-explicit-constructor)

  const BigInt& mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }

  Rational to_rational() const { return make_rational(mantissa_, lvc::pow2(exponent_)); }

  /// Multiplies by 2^-k.
  Dyadic scaled(std::int64_t k) const { return Dyadic(mantissa_, exponent_ + k); }

  /// Largest m * 2^-bits that is <= q.
  static Dyadic floor_of(const Rational& q, std::int64_t bits) {
    return Dyadic(lvc::floor(q * Rational(lvc::pow2(bits))), bits);
  }

  /// Nearest m * 2^-bits to q (ties rounded up); error at most 2^-bits-1.
  static Dyadic nearest(const Rational& q, std::int64_t bits) {
    return Dyadic(lvc::floor(q * Rational(lvc::pow2(bits)) + make_rational(1, 2)), bits);
  }

  static Dyadic pow2(std::int64_t k) { return Dyadic(1, -k); }

  /// Serialized as "m*2^-e".
  std::string str() const { return mantissa_.str() + "*2^-" + std::to_string(exponent_); }

  static Dyadic parse(std::string_view s) {
    auto star = s.find("*2^-");
    if (star == std::string_view::npos) return Dyadic(parse_bigint(s), 0);
    auto e = parse_bigint(s.substr(star + 4));
    if (e > 1'000'000) throw std::invalid_argument("dyadic exponent too large");
    return Dyadic(parse_bigint(s.substr(0, star)), static_cast<std::int64_t>(e));
  }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    auto e = std::max(a.exponent_, b.exponent_);
    return Dyadic((a.mantissa_ << static_cast<unsigned>(e - a.exponent_)) +
                      (b.mantissa_ << static_cast<unsigned>(e - b.exponent_)),
                  e);
  }
  friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.mantissa_, a.exponent_); }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
  }
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }

  friend int compare(const Dyadic& a, const Dyadic& b) {
    auto e = std::max(a.exponent_, b.exponent_);
    BigInt l = a.mantissa_ << static_cast<unsigned>(e - a.exponent_);
    BigInt r = b.mantissa_ << static_cast<unsigned>(e - b.exponent_);
    return l < r ? -1 : (l > r ? 1 : 0);
  }
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return compare(a, b) >= 0; }

 private:
  void normalize() {
    if (mantissa_ == 0) {
      exponent_ = 0;
      return;
    }
    if (exponent_ < 0) {
      mantissa_ <<= static_cast<unsigned>(-exponent_);
      exponent_ = 0;
      return;
    }
    if (exponent_ > 0) {
      auto tz = static_cast<std::int64_t>(boost::multiprecision::lsb(boost::multiprecision::abs(mantissa_)));
      auto shift = std::min(tz, exponent_);
      mantissa_ >>= static_cast<unsigned>(shift);
      exponent_ -= shift;
    }
  }

  BigInt mantissa_ = 0;
  std::int64_t exponent_ = 0;
};

inline Rational to_rational(const Dyadic& d) { return d.to_rational(); }

/// Closed interval [lo, hi] with rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool disjoint_from(const Interval& o) const { return hi < o.lo || o.hi < lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Integer square root bounds of a nonnegative rational at precision 2^-bits:
/// returns (lo, hi) with lo <= sqrt(q) <= hi and hi - lo <= 2^-bits.
inline std::pair<Dyadic, Dyadic> sqrt_bounds(const Rational& q, std::int64_t bits) {
  if (q < 0) throw std::domain_error("sqrt of negative rational");
  BigInt scaled = lvc::floor(q * Rational(pow2(2 * bits)));
  BigInt r = boost::multiprecision::sqrt(scaled);
  return {Dyadic(r, bits), Dyadic(r + 1, bits)};
}

}  // namespace lvc
