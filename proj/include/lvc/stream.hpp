#pragma once

// Infinite sequences given by an index -> value producer. Streams are
// immutable values; copying one shares the producer.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lvc {

template <class T>
class Stream {
 public:
  using value_type = T;
  using Producer = std::function<T(std::size_t)>;

  Stream() : producer_(std::make_shared<Producer>([](std::size_t) { return T{}; })) {}
  explicit Stream(Producer p) : producer_(std::make_shared<Producer>(std::move(p))) {}

  T operator[](std::size_t n) const { return (*producer_)(n); }

  std::vector<T> prefix(std::size_t n) const {
    std::vector<T> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back((*this)[i]);
    return out;
  }

  static Stream constant(T v) {
    return Stream([v](std::size_t) { return v; });
  }

  /// The finite word followed by `tail` repeated forever.
  static Stream from_prefix(std::vector<T> word, T tail = T{}) {
    return Stream([w = std::move(word), tail](std::size_t n) { return n < w.size() ? w[n] : tail; });
  }

 private:
  std::shared_ptr<const Producer> producer_;
};

/// Bits in {0,1}; the advice source of every machine.
using Bits = Stream<std::uint8_t>;

/// Parses a string of '0'/'1' characters into a bit stream continued by `tail`.
inline Bits bits_from_string(const std::string& word, std::uint8_t tail = 0) {
  std::vector<std::uint8_t> v;
  v.reserve(word.size());
  for (char c : word) {
    if (c != '0' && c != '1') throw std::invalid_argument("non-binary character in '" + word + "'");
    v.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Bits::from_prefix(std::move(v), tail);
}

inline std::string bits_to_string(const Bits& b, std::size_t n) {
  std::string s;
  s.reserve(n);
  for (std::size_t i = 0; i < n; ++i) s.push_back(static_cast<char>('0' + b[i]));
  return s;
}

/// Pairing of sequences: even positions read p, odd positions read q.
template <class T>
Stream<T> interleave(Stream<T> p, Stream<T> q) {
  return Stream<T>([p = std::move(p), q = std::move(q)](std::size_t n) { return n % 2 == 0 ? p[n / 2] : q[n / 2]; });
}

template <class T>
Stream<T> project_left(Stream<T> s) {
  return Stream<T>([s = std::move(s)](std::size_t n) { return s[2 * n]; });
}

template <class T>
Stream<T> project_right(Stream<T> s) {
  return Stream<T>([s = std::move(s)](std::size_t n) { return s[2 * n + 1]; });
}

/// Drops the first k elements.
template <class T>
Stream<T> drop(Stream<T> s, std::size_t k) {
  return Stream<T>([s = std::move(s), k](std::size_t n) { return s[n + k]; });
}

}  // namespace lvc
