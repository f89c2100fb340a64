#pragma once

// All-or-unique choice on [0,1] through probabilistic choice. The input
// names either [0,1] or a singleton {x}.
//
// K copies the input while it carries no negative information. If the first
// negative information sits at position n, K reads on until the hull of the
// remaining set is at most 2^-n wide, then names a proper interval of length
// at most 2^-n around it (two entries at positions n and n+1).
//
// H reads a point y of that interval and the input. Output i is y to within
// 2^-(i+1) while the input shows no negative information up to position i;
// afterwards it is x to within 2^-(i+1), which the earlier outputs are
// compatible with because |y - x| <= 2^-n.
//
// Point names are Cauchy names: entry i lies within 2^-i of the point.

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "lvc/machine.hpp"
#include "lvc/neg_closed.hpp"
#include "lvc/numeric.hpp"
#include "lvc/rdiv.hpp"
#include "lvc/signed_digit.hpp"
#include "lvc/stream.hpp"

namespace lvc {

using CauchyName = Stream<Rational>;

/// How far the transducers read their input before giving up on it.
inline constexpr std::size_t kAucDefaultHorizon = 4096;

/// Interval named by K(p), as an exact pair; [0,1] if p has no negative information within `horizon`.
inline Interval auc_K_interval(const NegClosedUnit& p, std::size_t horizon = kAucDefaultHorizon) {
  auto n = neg_first_information(p, horizon);
  if (!n) return Interval{0, 1};
  const Rational width = rational_pow2(-static_cast<std::int64_t>(*n));
  auto loc = neg_localize(p, width, horizon);
  if (!loc) throw std::runtime_error("auc_K: input not localized within horizon");
  const Rational c = loc->first.midpoint();
  const Rational r = width / 2;
  return Interval{std::max<Rational>(c - r, 0), std::min<Rational>(c + r, 1)};
}

inline NegClosedUnit auc_K(const NegClosedUnit& p, std::size_t horizon = kAucDefaultHorizon) {
  return NegClosedUnit([p, horizon](std::size_t pos) -> std::optional<OpenInterval> {
    auto n = neg_first_information(p, std::min(pos + 1, horizon));
    if (!n || pos < *n || pos > *n + 1) return std::nullopt;
    const Interval iv = auc_K_interval(p, horizon);
    if (pos == *n) return OpenInterval(-1, iv.lo);
    return OpenInterval(iv.hi, 2);
  });
}

inline CauchyName auc_H(const NegClosedUnit& p, const CauchyName& y, std::size_t horizon = kAucDefaultHorizon) {
  return CauchyName([p, y, horizon](std::size_t i) -> Rational {
    if (!neg_first_information(p, std::min(i + 1, horizon))) return y[i + 1];
    auto loc = neg_localize(p, rational_pow2(-static_cast<std::int64_t>(i) - 1), horizon);
    if (!loc) throw std::runtime_error("auc_H: input not localized within horizon");
    return loc->first.midpoint();
  });
}

/// Cauchy name of a + (b-a) rho_2(r): entry i within 2^-i.
inline CauchyName uniform_point_name(const Interval& iv, const Bits& r) {
  return CauchyName([iv, r](std::size_t i) {
    return iv.lo + iv.length() * binary_approx(r, i).to_rational();
  });
}

/// H(p, F(K(p))) with F sampling a uniform point of the interval named by
/// K(p). The monitor fires if the sample provably leaves that interval,
/// which cannot happen, so every advice succeeds.
inline LasVegasMachine<NegClosedUnit, Rational> auc_pcc_machine(std::size_t horizon = kAucDefaultHorizon) {
  using M = LasVegasMachine<NegClosedUnit, Rational>;
  M m;
  m.advice_space = AdviceSpace::cantor();
  m.compute = [horizon](const NegClosedUnit& p, const Bits& r) {
    const CauchyName out = auc_H(p, uniform_point_name(auc_K_interval(p, horizon), r), horizon);
    return M::ComputeStep([out, i = std::size_t{0}]() mutable { return Emission<Rational>::emit(out[i++]); });
  };
  m.monitor = [horizon](const NegClosedUnit& p, const Bits& r) {
    const Interval iv = auc_K_interval(p, horizon);
    const CauchyName y = uniform_point_name(iv, r);
    return M::MonitorStep([iv, y, t = std::size_t{0}]() mutable {
      ++t;
      const Rational yt = y[t];
      const Rational rad = rational_pow2(-static_cast<std::int64_t>(t));
      return (yt + rad < iv.lo || yt - rad > iv.hi) ? Signal::Fired : Signal::Clear;
    });
  };
  return m;
}

/// Name of a closed set of correct answers to robust division at (x, y).
/// Position i reads i+1 digits of each input. Until max(x,y) > 2^-(i+1) is
/// seen there is nothing to say; afterwards the positions alternately
/// exclude what lies left and right of the current enclosure of x/max(x,y).
/// At y = 0 < x this names {1}, which is one correct answer.
inline NegClosedUnit rdiv_auc_name(const SignedDigitStream& x, const SignedDigitStream& y) {
  return NegClosedUnit([x, y](std::size_t pos) -> std::optional<OpenInterval> {
    const auto m = static_cast<std::int64_t>(pos + 1);
    const Rational xa = sds_approx(x, pos + 1).to_rational(), ya = sds_approx(y, pos + 1).to_rational();
    const Rational r = rational_pow2(-m);
    if (!(std::max(xa, ya) - r > r)) return std::nullopt;
    const Rational xlo = std::max<Rational>(xa - r, 0), xhi = std::min<Rational>(xa + r, 1);
    const Rational mlo = std::max(xlo, std::max<Rational>(ya - r, 0));
    const Rational mhi = std::max(xhi, std::min<Rational>(ya + r, 1));
    if (pos % 2 == 0) return OpenInterval(-1, xlo / mhi);
    return OpenInterval(std::min<Rational>(xhi / mlo, 1), 2);
  });
}

}  // namespace lvc
