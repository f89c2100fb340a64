#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace lvc {

/// floor(sqrt(x)) by Newton iteration on integers.
constexpr std::uint64_t isqrt(std::uint64_t x) {
  if (x < 2) return x;
  std::uint64_t r = x / 2 + 1;
  std::uint64_t next = (r + x / r) / 2;
  while (next < r) {
    r = next;
    next = (r + x / r) / 2;
  }
  return r;
}

/// Cantor pair <n,k> = (n+k+1)(n+k)/2 + k.
constexpr std::uint64_t cantor_pair(std::uint64_t n, std::uint64_t k) {
  std::uint64_t s = n + k;
  if (s < n || s >= (std::uint64_t{1} << 32)) throw std::overflow_error("cantor_pair: arguments too large");
  return (s + 1) * s / 2 + k;
}

constexpr std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) {
  if (z >= (std::uint64_t{1} << 62)) throw std::overflow_error("cantor_unpair: argument too large");
  std::uint64_t w = (isqrt(8 * z + 1) - 1) / 2;
  std::uint64_t k = z - w * (w + 1) / 2;
  return {w - k, k};
}

}  // namespace lvc
