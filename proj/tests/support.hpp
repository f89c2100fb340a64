#pragma once

// Test-only generators and brute-force oracles. The oracles work on plain
// strings and never call into the library code they check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lvc/numeric.hpp"

namespace lvc::testing {

inline std::string word_of(std::uint64_t bits, std::size_t len) {
  std::string w(len, '0');
  for (std::size_t j = 0; j < len; ++j)
    if ((bits >> (len - 1 - j)) & 1U) w[j] = '1';
  return w;
}

/// All binary words of length exactly `len`, in lexicographic order.
inline std::vector<std::string> words_of_length(std::size_t len) {
  std::vector<std::string> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << len); ++b) out.push_back(word_of(b, len));
  return out;
}

/// Nonempty random words, possibly redundant or overlapping.
inline std::vector<std::string> random_exclusions(std::mt19937_64& rng, std::size_t max_len, std::size_t max_count) {
  std::uniform_int_distribution<std::size_t> count(0, max_count), len(1, max_len);
  std::vector<std::string> out(count(rng));
  for (auto& w : out) {
    const std::size_t l = len(rng);
    w = word_of(rng(), l);
  }
  return out;
}

inline bool has_prefix_in(const std::string& w, const std::vector<std::string>& excluded) {
  for (const auto& u : excluded)
    if (u.size() <= w.size() && w.compare(0, u.size(), u) == 0) return true;
  return false;
}

/// Fraction of depth-n words with no excluded prefix.
inline Rational brute_measure(const std::vector<std::string>& excluded, std::size_t n) {
  std::size_t alive = 0;
  for (const auto& w : words_of_length(n)) alive += !has_prefix_in(w, excluded);
  return make_rational(static_cast<long long>(alive), static_cast<long long>(std::uint64_t{1} << n));
}

inline std::size_t max_length(const std::vector<std::string>& words) {
  std::size_t m = 0;
  for (const auto& w : words) m = std::max(m, w.size());
  return m;
}

}  // namespace lvc::testing
