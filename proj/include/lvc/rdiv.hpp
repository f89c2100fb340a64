#pragma once

// Robust division x/max(x,y) on [0,1]. At y = 0 every value of [0,1] is
// correct; the exact version picks 0.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "lvc/numeric.hpp"
#include "lvc/sierpinski.hpp"
#include "lvc/signed_digit.hpp"

namespace lvc {

inline void require_unit(const Rational& v, const char* op) {
  if (v < 0 || v > 1) throw std::invalid_argument(std::string(op) + ": argument outside [0,1]");
}

inline Rational rdiv(const Rational& x, const Rational& y) {
  require_unit(x, "rdiv");
  require_unit(y, "rdiv");
  if (y == 0) return 0;
  return x / std::max(x, y);
}

/// True if v is a correct answer to robust division at (x, y).
inline bool rdiv_accepts(const Rational& x, const Rational& y, const Rational& v) {
  require_unit(x, "rdiv_accepts");
  require_unit(y, "rdiv_accepts");
  if (y == 0) return 0 <= v && v <= 1;
  return v == rdiv(x, y);
}

enum class RdivStatus { Converged, Exhausted };

struct RdivOutcome {
  RdivStatus status = RdivStatus::Exhausted;
  /// The current output: provisionally 0, the quotient after the mind change.
  Dyadic value;
  std::size_t mind_changes = 0;
  /// The n with max(x,y) > 2^-n witnessed, if any.
  std::optional<std::size_t> witness_precision;
  std::size_t steps = 0;
};

/// Reads one more digit of each input per round (two steps). Outputs 0 until
/// some round m shows max(x,y) > 2^-m; that is the single mind change. Then
/// reads on until the enclosure of x/max(x,y) is at most 2^-(k+1) wide and
/// returns its midpoint rounded to k+2 bits.
inline RdivOutcome rdiv_stream(const SignedDigitStream& x, const SignedDigitStream& y, std::size_t k,
                               RunBudget budget) {
  RdivOutcome out;
  BigInt xm = 0, ym = 0;  // sds_approx * 2^m
  const Rational target = rational_pow2(-static_cast<std::int64_t>(k) - 1);
  for (std::size_t m = 1;; ++m) {
    if (out.steps + 2 > budget.fuel) return out;
    out.steps += 2;
    xm = 2 * xm + x.digit(m - 1);
    ym = 2 * ym + y.digit(m - 1);
    const Rational r = rational_pow2(-static_cast<std::int64_t>(m));
    const Rational xa = make_rational(xm, pow2(static_cast<std::int64_t>(m)));
    const Rational ya = make_rational(ym, pow2(static_cast<std::int64_t>(m)));
    if (!out.witness_precision) {
      if (std::max(xa, ya) - r > r) {
        out.witness_precision = m;
        out.mind_changes = 1;
      } else {
        continue;
      }
    }
    const Rational xlo = std::max<Rational>(xa - r, 0), xhi = std::min<Rational>(xa + r, 1);
    const Rational ylo = std::max<Rational>(ya - r, 0), yhi = std::min<Rational>(ya + r, 1);
    const Rational mlo = std::max(xlo, ylo), mhi = std::max(xhi, yhi);
    const Rational qlo = xlo / mhi;
    const Rational qhi = std::min<Rational>(xhi / mlo, 1);
    out.value = Dyadic::nearest((qlo + qhi) / 2, static_cast<std::int64_t>(k) + 2);
    if (qhi - qlo <= target) {
      out.status = RdivStatus::Converged;
      return out;
    }
  }
}

}  // namespace lvc
