#pragma once

// Finite choice with a probability threshold, encoded as closed choice on
// [0,1]: the admissible indices C of {0,...,b-1} become a union of disjoint
// closed intervals I_i = [(i+1)/b - l, (i+1)/b] of common length l, where
// eps/a < l < 1/b, so that at least a of them carry measure above eps.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "lvc/neg_closed.hpp"
#include "lvc/numeric.hpp"

namespace lvc {

struct IntervalEncoding {
  std::size_t a = 0;
  std::size_t b = 0;
  Rational eps;
  Rational length;
  std::vector<std::size_t> indices;
  /// I_i for each i in `indices`, in increasing order.
  std::vector<Interval> intervals;
  /// Name of the union: the gaps between consecutive intervals, then silence.
  NegClosedUnit name;

  Rational measure() const { return Rational(static_cast<long long>(indices.size())) * length; }
};

inline Interval interval_encode_slot(std::size_t i, std::size_t b, const Rational& l) {
  const Rational right = make_rational(static_cast<long long>(i + 1), static_cast<long long>(b));
  return Interval{right - l, right};
}

inline IntervalEncoding interval_encode(const std::vector<std::size_t>& c, std::size_t a, std::size_t b,
                                        const Rational& eps) {
  if (!(0 < a && a < b)) throw std::invalid_argument("interval_encode: need 0 < a < b");
  if (eps < 0) throw std::invalid_argument("interval_encode: eps must be nonnegative");
  const Rational lo_bound = eps / Rational(static_cast<long long>(a));
  const Rational hi_bound = make_rational(1, static_cast<long long>(b));
  if (!(lo_bound < hi_bound)) throw std::invalid_argument("interval_encode: need eps/a < 1/b");
  std::set<std::size_t> distinct(c.begin(), c.end());
  for (auto i : distinct)
    if (i >= b) throw std::invalid_argument("interval_encode: index outside {0,...,b-1}");
  if (distinct.size() < a) throw std::invalid_argument("interval_encode: need |C| >= a");

  IntervalEncoding e;
  e.a = a;
  e.b = b;
  e.eps = eps;
  e.length = (lo_bound + hi_bound) / 2;
  e.indices.assign(distinct.begin(), distinct.end());
  for (auto i : e.indices) e.intervals.push_back(interval_encode_slot(i, b, e.length));

  std::vector<OpenInterval> gaps;
  Rational left = -1;
  for (const auto& iv : e.intervals) {
    gaps.emplace_back(left, iv.lo);
    left = iv.hi;
  }
  if (left < 1) gaps.emplace_back(left, 2);
  e.name = NegClosedUnit([gaps](std::size_t pos) {
    return pos < gaps.size() ? std::optional<OpenInterval>(gaps[pos]) : std::nullopt;
  });
  return e;
}

/// The index i with x in I_i, provided i is admissible.
inline std::optional<std::size_t> interval_decode(const IntervalEncoding& e, const Rational& x) {
  const BigInt slot = lvc::ceil(x * Rational(static_cast<long long>(e.b))) - 1;
  if (slot < 0 || slot >= static_cast<long long>(e.b)) return std::nullopt;
  const auto i = static_cast<std::size_t>(slot);
  if (!std::binary_search(e.indices.begin(), e.indices.end(), i)) return std::nullopt;
  if (!interval_encode_slot(i, e.b, e.length).contains(x)) return std::nullopt;
  return i;
}

}  // namespace lvc
