#pragma once

// Derandomization of a single-valued randomized computation whose success
// set has measure above 1/2. For n = 0, 1, ... every advice word of length n
// is asked for an output interval of radius 2^-(k+2). Closed intervals on
// the line that pairwise intersect share a common point, so the largest
// pairwise-intersecting family is the largest set covering one point, found
// by a sweep. Once such a family holds more than half of {0,1}^n, a common
// point of it is within 2^-(k+1) of the true value.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lvc/numeric.hpp"

namespace lvc {

/// Output of the randomized computation on an advice word, or nothing if that advice is not yet decisive.
using MajorityOracle = std::function<std::optional<Interval>(const std::string&)>;

enum class MajorityStatus { Found, Exhausted };

struct MajorityOutcome {
  MajorityStatus status = MajorityStatus::Exhausted;
  /// Rounded to k+2 bits; within 2^-k of the true value when Found.
  Dyadic value;
  std::size_t depth = 0;
  std::size_t support = 0;
};

/// A point covered by the most intervals, and that count. Ties go to the leftmost point.
inline std::pair<Rational, std::size_t> deepest_point(const std::vector<Interval>& ivs) {
  std::vector<std::pair<Rational, int>> events;
  events.reserve(2 * ivs.size());
  for (const auto& iv : ivs) {
    events.emplace_back(iv.lo, 0);  // opening sorts before closing at equal coordinates
    events.emplace_back(iv.hi, 1);
  }
  std::sort(events.begin(), events.end());
  std::size_t cover = 0, best = 0;
  Rational where = 0;
  for (const auto& [x, kind] : events) {
    if (kind == 0) {
      if (++cover > best) {
        best = cover;
        where = x;
      }
    } else {
      --cover;
    }
  }
  return {where, best};
}

inline MajorityOutcome majority_vote(const MajorityOracle& oracle, std::size_t k, std::size_t max_depth) {
  if (max_depth > 24) throw std::invalid_argument("majority_vote: max_depth above 24");
  MajorityOutcome out;
  for (std::size_t n = 0; n <= max_depth; ++n) {
    std::vector<Interval> ivs;
    for (std::size_t w = 0; w < (std::size_t{1} << n); ++w) {
      std::string word(n, '0');
      for (std::size_t j = 0; j < n; ++j)
        if ((w >> (n - 1 - j)) & 1U) word[j] = '1';
      if (auto iv = oracle(word)) {
        if (iv->hi < iv->lo) throw std::invalid_argument("majority_vote: oracle returned an empty interval");
        ivs.push_back(*iv);
      }
    }
    auto [point, count] = deepest_point(ivs);
    if (2 * count > (std::size_t{1} << n)) {
      out.status = MajorityStatus::Found;
      out.value = Dyadic::nearest(point, static_cast<std::int64_t>(k) + 2);
      out.depth = n;
      out.support = count;
      return out;
    }
  }
  return out;
}

}  // namespace lvc
