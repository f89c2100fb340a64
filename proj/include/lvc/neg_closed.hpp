#pragma once

// Closed subsets of [0,1] named by negative information: a stream whose
// entries are open rational intervals (or nothing), the set being [0,1]
// minus their union. Endpoints may lie outside [0,1]; only the part inside
// [0,1] removes anything.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lvc/numeric.hpp"
#include "lvc/stream.hpp"

namespace lvc {

struct OpenInterval {
  Rational lo;
  Rational hi;

  OpenInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(lo < hi)) throw std::invalid_argument("open interval needs lo < hi");
  }
  bool contains(const Rational& x) const { return lo < x && x < hi; }
  /// True if the interval removes a nonempty part of [0,1].
  bool meets_unit() const { return lo < 1 && hi > 0; }
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

using NegClosedUnit = Stream<std::optional<OpenInterval>>;

/// Name of [0,1]: no negative information at all.
inline NegClosedUnit neg_full_name() {
  return NegClosedUnit([](std::size_t) { return std::optional<OpenInterval>{}; });
}

/// Name of {x}: silent before position n, then pairs of intervals closing in
/// on x with radius 2^-(i+2). The side of x with more room comes first, so
/// the entry at position n already removes part of [0,1].
inline NegClosedUnit neg_singleton_name(const Rational& x, std::size_t n) {
  if (x < 0 || x > 1) throw std::invalid_argument("neg_singleton_name: point outside [0,1]");
  const bool left_first = x >= make_rational(1, 2);
  return NegClosedUnit([x, n, left_first](std::size_t pos) -> std::optional<OpenInterval> {
    if (pos < n) return std::nullopt;
    const std::size_t i = (pos - n) / 2;
    const bool left = ((pos - n) % 2 == 0) == left_first;
    const Rational r = rational_pow2(-static_cast<std::int64_t>(i + 2));
    if (left) return OpenInterval(-1, x - r);
    return OpenInterval(x + r, 2);
  });
}

/// Name of [a,b] inside [0,1], starting at position n.
inline NegClosedUnit neg_interval_name(const Rational& a, const Rational& b, std::size_t n = 0) {
  if (!(0 <= a && a <= b && b <= 1)) throw std::invalid_argument("neg_interval_name: need 0 <= a <= b <= 1");
  return NegClosedUnit([a, b, n](std::size_t pos) -> std::optional<OpenInterval> {
    if (pos == n && a > 0) return OpenInterval(-1, a);
    if (pos == n + 1 && b < 1) return OpenInterval(b, 2);
    return std::nullopt;
  });
}

/// Entries of the first `horizon` positions.
inline std::vector<OpenInterval> neg_known(const NegClosedUnit& p, std::size_t horizon) {
  std::vector<OpenInterval> out;
  for (std::size_t i = 0; i < horizon; ++i)
    if (auto e = p[i]) out.push_back(*e);
  return out;
}

/// First position below `horizon` carrying an entry that removes part of [0,1].
inline std::optional<std::size_t> neg_first_information(const NegClosedUnit& p, std::size_t horizon) {
  for (std::size_t i = 0; i < horizon; ++i)
    if (auto e = p[i]; e && e->meets_unit()) return i;
  return std::nullopt;
}

/// Convex hull of [0,1] minus the given open intervals; empty if nothing is left.
inline std::optional<Interval> uncovered_hull(std::vector<OpenInterval> removed) {
  std::sort(removed.begin(), removed.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  Rational lo = 0;
  for (const auto& r : removed) {
    if (r.lo >= lo) break;
    if (r.hi > lo) lo = r.hi;
  }
  std::sort(removed.begin(), removed.end(), [](const auto& a, const auto& b) { return a.hi > b.hi; });
  Rational hi = 1;
  for (const auto& r : removed) {
    if (r.hi <= hi) break;
    if (r.lo < hi) hi = r.lo;
  }
  if (lo > 1 || hi < 0 || lo > hi) return std::nullopt;
  return Interval{lo, hi};
}

inline std::optional<Interval> neg_hull(const NegClosedUnit& p, std::size_t horizon) {
  return uncovered_hull(neg_known(p, horizon));
}

/// Reads p until the hull is at most `width` wide; nullopt if that does not happen within `horizon`.
/// The hull is maintained incrementally: lo and hi only move inward, and an
/// entry is kept pending until it covers one of them or falls outside.
inline std::optional<std::pair<Interval, std::size_t>> neg_localize(const NegClosedUnit& p, const Rational& width,
                                                                    std::size_t horizon) {
  Rational lo = 0, hi = 1;
  std::vector<OpenInterval> pending;
  for (std::size_t i = 0; i < horizon; ++i) {
    auto e = p[i];
    if (!e) continue;
    pending.push_back(*e);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t j = 0; j < pending.size();) {
        const OpenInterval& r = pending[j];
        bool drop = true;
        if (r.lo < lo && lo < r.hi) {
          lo = r.hi;
          changed = true;
        } else if (r.lo < hi && hi < r.hi) {
          hi = r.lo;
          changed = true;
        } else if (lo <= hi && r.hi > lo && r.lo < hi) {
          drop = false;  // strictly inside the hull for now
        }
        if (drop) {
          pending[j] = pending.back();
          pending.pop_back();
        } else {
          ++j;
        }
        if (lo > hi) throw std::invalid_argument("neg_localize: name denotes the empty set");
      }
    }
    if (hi - lo <= width) return std::make_pair(Interval{lo, hi}, i + 1);
  }
  return std::nullopt;
}

}  // namespace lvc
