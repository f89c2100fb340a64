#pragma once

// Advice spaces and their seeded samplers.
//
// Every sample is a raw uniform bit stream; the advice space decides how
// those bits are read:
//   Cantor          the bits themselves (uniform product measure)
//   Naturals        number of 1s before the first 0, so P(n) = 2^-(n+1)
//   NatTimesCantor  natural from the even positions, bits from the odd ones
//   Baire           1^{n0} 0 1^{n1} 0 ... read back as (n0, n1, ...)
//
// Bits come from SplitMix64 in counter mode: bit i of the stream seeded with
// s is bit (i mod 64) of splitmix64_at(s, i / 64), where splitmix64_at(s, j)
// is the j-th output of a SplitMix64 generator started at state s. The same
// construction derives per-trial subseeds, so streams are reproducible and
// random-access.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "lvc/stream.hpp"

namespace lvc {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// j-th output of SplitMix64 started at `state`.
constexpr std::uint64_t splitmix64_at(std::uint64_t state, std::uint64_t j) {
  return splitmix64_mix(state + (j + 1) * kGoldenGamma);
}

/// Seed of the i-th independent substream of `seed`.
constexpr std::uint64_t subseed(std::uint64_t seed, std::uint64_t i) { return splitmix64_at(seed, i); }

inline Bits seeded_bits(std::uint64_t seed) {
  return Bits([seed](std::size_t i) {
    return static_cast<std::uint8_t>((splitmix64_at(seed, i / 64) >> (i % 64)) & 1U);
  });
}

enum class AdviceKind { Naturals, NaturalsCounting, Cantor, NatTimesCantor, Baire };

struct AdviceSpace {
  AdviceKind kind = AdviceKind::Cantor;

  /// Counting measure on the naturals is not a probability measure.
  bool samplable() const { return kind != AdviceKind::NaturalsCounting; }

  static AdviceSpace naturals() { return {AdviceKind::Naturals}; }
  static AdviceSpace naturals_counting() { return {AdviceKind::NaturalsCounting}; }
  static AdviceSpace cantor() { return {AdviceKind::Cantor}; }
  static AdviceSpace nat_times_cantor() { return {AdviceKind::NatTimesCantor}; }
  static AdviceSpace baire() { return {AdviceKind::Baire}; }
};

inline std::string to_string(AdviceKind k) {
  switch (k) {
    case AdviceKind::Naturals: return "naturals";
    case AdviceKind::NaturalsCounting: return "naturals-counting";
    case AdviceKind::Cantor: return "cantor";
    case AdviceKind::NatTimesCantor: return "nat-times-cantor";
    case AdviceKind::Baire: return "baire";
  }
  return "?";
}

/// Reads 1^n 0 starting at `offset`; returns n and the offset after the 0.
/// A run longer than `limit` is a measure-zero event and is rejected.
inline std::pair<std::uint64_t, std::size_t> read_unary(const Bits& bits, std::size_t offset,
                                                        std::size_t limit = 1 << 16) {
  std::uint64_t n = 0;
  while (bits[offset + n] == 1) {
    if (++n > limit) throw std::runtime_error("advice decode: unary run exceeds limit");
  }
  return {n, offset + n + 1};
}

/// A sampled (or constructed) advice: raw bits plus the space that reads them.
class Advice {
 public:
  Advice(AdviceSpace space, Bits raw) : space_(space), raw_(std::move(raw)) {}

  const AdviceSpace& space() const { return space_; }
  const Bits& raw() const { return raw_; }

  const Bits& bits() const { return raw_; }

  std::uint64_t natural() const { return read_unary(raw_, 0).first; }

  /// (n, p) for the product space: n from the even positions, p the odd positions.
  std::pair<std::uint64_t, Bits> nat_and_bits() const {
    return {read_unary(project_left(raw_), 0).first, project_right(raw_)};
  }

  /// Sequence of naturals under the inverse of 1^{n0} 0 1^{n1} 0 ...
  Stream<std::uint64_t> naturals() const {
    Bits raw = raw_;
    return Stream<std::uint64_t>([raw](std::size_t i) {
      std::size_t offset = 0;
      std::uint64_t n = 0;
      for (std::size_t j = 0; j <= i; ++j) std::tie(n, offset) = read_unary(raw, offset);
      return n;
    });
  }

 private:
  AdviceSpace space_;
  Bits raw_;
};

inline Advice advice_sample(AdviceSpace space, std::uint64_t seed) {
  if (!space.samplable())
    throw std::invalid_argument("advice_sample: counting measure on the naturals is not samplable");
  return Advice(space, seeded_bits(seed));
}

}  // namespace lvc
