#pragma once

// Continuous piecewise-linear functions on [0,1] with rational breakpoints.
// Evaluation, ranges and zero sets are exact.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lvc/numeric.hpp"

namespace lvc {

struct PwlFunction {
  /// (t, f(t)) with t strictly increasing from 0 to 1.
  std::vector<std::pair<Rational, Rational>> breakpoints;

  static PwlFunction make(std::vector<std::pair<Rational, Rational>> pts) {
    if (pts.size() < 2) throw std::invalid_argument("pwl: need at least two breakpoints");
    if (pts.front().first != 0 || pts.back().first != 1) throw std::invalid_argument("pwl: breakpoints must span [0,1]");
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (!(pts[i - 1].first < pts[i].first)) throw std::invalid_argument("pwl: breakpoints must increase strictly");
    return PwlFunction{std::move(pts)};
  }
};

inline Rational pwl_eval(const PwlFunction& f, const Rational& t) {
  if (t < 0 || t > 1) throw std::invalid_argument("pwl_eval: argument outside [0,1]");
  const auto& p = f.breakpoints;
  auto it = std::lower_bound(p.begin(), p.end(), t, [](const auto& bp, const Rational& x) { return bp.first < x; });
  if (it->first == t) return it->second;
  const auto& [t1, v1] = *it;
  const auto& [t0, v0] = *(it - 1);
  return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
}

/// [min f, max f] over [lo, hi] within [0,1].
inline Interval pwl_range(const PwlFunction& f, const Interval& iv) {
  const Rational lo = std::max<Rational>(iv.lo, 0), hi = std::min<Rational>(iv.hi, 1);
  if (lo > hi) throw std::invalid_argument("pwl_range: interval misses [0,1]");
  Rational mn = pwl_eval(f, lo), mx = mn;
  auto widen = [&](const Rational& v) {
    if (v < mn) mn = v;
    if (v > mx) mx = v;
  };
  widen(pwl_eval(f, hi));
  for (const auto& [t, v] : f.breakpoints)
    if (lo < t && t < hi) widen(v);
  return {mn, mx};
}

/// Zero set as sorted disjoint closed intervals; points have lo == hi.
inline std::vector<Interval> pwl_zero_set(const PwlFunction& f) {
  std::vector<Interval> raw;
  const auto& p = f.breakpoints;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const auto& [t0, v0] = p[i];
    const auto& [t1, v1] = p[i + 1];
    if (v0 == 0 && v1 == 0) raw.push_back({t0, t1});
    else if (v0 == 0) raw.push_back({t0, t0});
    else if (v1 == 0) raw.push_back({t1, t1});
    else if ((v0 < 0) != (v1 < 0)) {
      const Rational z = t0 - v0 * (t1 - t0) / (v1 - v0);
      raw.push_back({z, z});
    }
  }
  std::vector<Interval> out;
  for (auto& iv : raw) {
    if (!out.empty() && iv.lo <= out.back().hi) out.back().hi = std::max(out.back().hi, iv.hi);
    else out.push_back(iv);
  }
  return out;
}

/// Distance from x to the zero set, or nothing if f has no zero.
inline std::optional<Rational> pwl_zero_distance(const PwlFunction& f, const Rational& x) {
  std::optional<Rational> best;
  for (const auto& iv : pwl_zero_set(f)) {
    Rational d = x < iv.lo ? iv.lo - x : (x > iv.hi ? x - iv.hi : Rational(0));
    if (!best || d < *best) best = d;
  }
  return best;
}

inline bool pwl_has_sign_change(const PwlFunction& f) {
  return f.breakpoints.front().second * f.breakpoints.back().second < 0;
}

}  // namespace lvc
