#pragma once

// Measure-preserving maps between advice spaces.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lvc/cotree.hpp"
#include "lvc/numeric.hpp"

namespace lvc {

/// iota(w) = 1^{w0} 0 1^{w1} 0 ... 1^{wk} 0.
inline std::string baire_to_cantor_prefix(const std::vector<std::uint64_t>& w) {
  std::string out;
  for (auto n : w) {
    if (n > (std::uint64_t{1} << 20)) throw std::length_error("baire_to_cantor_prefix: entry too large");
    out.append(static_cast<std::size_t>(n), '1');
    out.push_back('0');
  }
  return out;
}

/// Geometric-product measure of the Baire cylinder w N^N, equal to the uniform measure of iota(w) 2^N.
inline Rational baire_cylinder_measure(const std::vector<std::uint64_t>& w) {
  std::int64_t total = 0;
  for (auto n : w) total += static_cast<std::int64_t>(n) + 1;
  return rational_pow2(-total);
}

/// Brackets the geometric-product measure of sgn^{-1}(u 2^N) by summing each
/// coordinate's mass over the values 0..depth. Coordinate i contributes
/// mu{0} = 1/2 when u_i = 0 and the sum over k >= 1 of 2^{-k-1} when u_i = 1;
/// the lower bound drops the tail beyond depth, the upper bound adds its
/// exact mass 2^{-depth-1}.
inline std::pair<Dyadic, Dyadic> signum_preimage_measure(const std::string& u, std::size_t depth) {
  require_binary_word(u);
  if (depth < u.size()) throw std::invalid_argument("signum_preimage_measure: depth shorter than word");
  const auto d = static_cast<std::int64_t>(depth);
  // sum_{k=1}^{depth} 2^{-k-1} = 1/2 - 2^{-depth-1}
  const Dyadic one_lower = Dyadic(1, 1) - Dyadic(1, d + 1);
  const Dyadic tail = Dyadic(1, d + 1);
  Dyadic lo = 1, hi = 1;
  for (char c : u) {
    if (c == '0') {
      lo = lo * Dyadic(1, 1);
      hi = hi * Dyadic(1, 1);
    } else {
      lo = lo * one_lower;
      hi = hi * (one_lower + tail);
    }
  }
  return {lo, hi};
}

}  // namespace lvc
