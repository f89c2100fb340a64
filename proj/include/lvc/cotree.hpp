#pragma once

// Binary trees given by negative information: a list of excluded words u,
// each removing the cylinder u.2^N. A word is a member iff no excluded word
// is a prefix of it. Trees need not be pruned.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lvc/numeric.hpp"
#include "lvc/stream.hpp"

namespace lvc {

inline void require_binary_word(std::string_view w) {
  for (char c : w)
    if (c != '0' && c != '1') throw std::invalid_argument("non-binary character in word '" + std::string(w) + "'");
}

/// Shortlex order: by length, then lexicographically.
inline bool shortlex_less(const std::string& a, const std::string& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

/// i-th binary word in shortlex order: e, 0, 1, 00, 01, ...
inline std::string shortlex_word(std::size_t i) {
  std::size_t len = 0;
  while (i >= (std::size_t{1} << len)) {
    i -= std::size_t{1} << len;
    ++len;
  }
  std::string w(len, '0');
  for (std::size_t j = 0; j < len; ++j)
    if ((i >> (len - 1 - j)) & 1U) w[j] = '1';
  return w;
}

/// Lazily enumerated exclusions; an empty optional means "nothing new at this position".
using ExclusionEnumeration = Stream<std::optional<std::string>>;

class CoTree {
 public:
  /// The full tree.
  CoTree() = default;

  /// Normalizes the words to a prefix-free antichain.
  static CoTree from_excluded(std::vector<std::string> words) {
    for (const auto& w : words) require_binary_word(w);
    std::sort(words.begin(), words.end(), shortlex_less);
    CoTree t;
    for (auto& w : words) {
      if (!t.member(w)) continue;  // already covered by a shorter exclusion
      t.insert(std::move(w));
    }
    return t;
  }

  /// A tree whose exclusions are enumerated lazily after the finite ones.
  static CoTree enumerated(ExclusionEnumeration enumeration, std::vector<std::string> finite = {}) {
    CoTree t = from_excluded(std::move(finite));
    t.lazy_ = std::move(enumeration);
    return t;
  }

  bool is_finite() const { return !lazy_.has_value(); }

  /// The finite part of the exclusions as a shortlex-sorted antichain.
  const std::vector<std::string>& excluded() const { return antichain_; }

  std::size_t max_excluded_length() const { return lengths_.empty() ? 0 : *lengths_.rbegin(); }

  /// Membership against the finite exclusions.
  bool member(std::string_view w) const {
    for (std::size_t len : lengths_) {
      if (len > w.size()) break;
      if (set_.count(std::string(w.substr(0, len)))) return false;
    }
    return true;
  }

  /// Membership against the finite exclusions and the first `horizon` enumerated ones.
  bool member(std::string_view w, std::size_t horizon) const {
    if (!member(w)) return false;
    if (!lazy_) return true;
    for (std::size_t i = 0; i < horizon; ++i) {
      auto u = (*lazy_)[i];
      if (u && u->size() <= w.size() && w.substr(0, u->size()) == *u) return false;
    }
    return true;
  }

  /// True if exactly w (not a proper prefix of it) is in the finite antichain.
  bool excludes_exactly(std::string_view w) const { return set_.count(std::string(w)) > 0; }

  /// Enumerated exclusion at position i, if the tree is lazy.
  std::optional<std::string> enumerated_at(std::size_t i) const {
    if (!lazy_) return std::nullopt;
    auto u = (*lazy_)[i];
    if (u) require_binary_word(*u);
    return u;
  }

  /// The finite tree known after reading `horizon` enumerated exclusions.
  CoTree known_after(std::size_t horizon) const {
    std::vector<std::string> words = antichain_;
    if (lazy_)
      for (std::size_t i = 0; i < horizon; ++i)
        if (auto u = (*lazy_)[i]) words.push_back(*u);
    return from_excluded(std::move(words));
  }

  /// Number of depth-n members extending w (n >= |w|).
  BigInt member_count(std::string_view w, std::size_t n) const {
    if (n < w.size()) throw std::invalid_argument("member_count: depth shorter than word");
    if (!member(w)) return 0;
    BigInt count = pow2(static_cast<std::int64_t>(n - w.size()));
    for (const auto& u : antichain_)
      if (u.size() > w.size() && u.size() <= n && std::string_view(u).substr(0, w.size()) == w)
        count -= pow2(static_cast<std::int64_t>(n - u.size()));
    return count;
  }

 private:
  void insert(std::string w) {
    lengths_.insert(w.size());
    set_.insert(w);
    antichain_.push_back(std::move(w));
  }

  std::vector<std::string> antichain_;
  std::unordered_set<std::string> set_;
  std::set<std::size_t> lengths_;
  std::optional<ExclusionEnumeration> lazy_;
};

inline CoTree tree_from_excluded(std::vector<std::string> words) { return CoTree::from_excluded(std::move(words)); }

inline void require_finite(const CoTree& t, const char* op) {
  if (!t.is_finite()) throw std::invalid_argument(std::string(op) + ": tree has an infinite exclusion list");
}

/// |T cap {0,1}^n| * 2^-n, the depth-n upper bound on the measure of [T].
inline Dyadic tree_measure_upper(const CoTree& t, std::size_t n) {
  require_finite(t, "tree_measure_upper");
  return Dyadic(t.member_count("", n), static_cast<std::int64_t>(n));
}

/// Upper bound using what is known after `horizon` enumerated exclusions.
inline Dyadic tree_measure_upper(const CoTree& t, std::size_t n, std::size_t horizon) {
  return tree_measure_upper(t.known_after(horizon), n);
}

/// mu([T]) = 1 - sum over the antichain of 2^-|u|.
inline Rational tree_measure_exact(const CoTree& t) {
  require_finite(t, "tree_measure_exact");
  Rational removed = 0;
  for (const auto& u : t.excluded()) removed += make_rational(1, pow2(static_cast<std::int64_t>(u.size())));
  return 1 - removed;
}

/// mu([T] cap w.2^N) * 2^|w| at depth n >= |w| (upper bound; exact once n covers the exclusions).
inline Rational relative_measure_upper(const CoTree& t, const std::string& w, std::size_t n) {
  return make_rational(t.member_count(w, n), pow2(static_cast<std::int64_t>(n - w.size())));
}

/// Co-tree of C = (A x 2^N) u (2^N x B) under bit interleaving. A point lies
/// outside C iff its even bits extend an exclusion u of A and its odd bits
/// extend an exclusion v of B; each such pair (u, v) excludes every word of
/// length max(2|u|-1, 2|v|) that places u on the even and v on the odd positions.
inline CoTree product_amplify(const CoTree& a, const CoTree& b) {
  require_finite(a, "product_amplify");
  require_finite(b, "product_amplify");
  std::vector<std::string> excluded;
  for (const auto& u : a.excluded()) {
    for (const auto& v : b.excluded()) {
      std::size_t len = std::max(u.empty() ? 0 : 2 * u.size() - 1, 2 * v.size());
      std::string base(len, '?');
      std::vector<std::size_t> free;
      for (std::size_t i = 0; i < len; ++i) {
        std::size_t k = i / 2;
        if (i % 2 == 0 && k < u.size()) base[i] = u[k];
        else if (i % 2 == 1 && k < v.size()) base[i] = v[k];
        else free.push_back(i);
      }
      if (free.size() > 24) throw std::length_error("product_amplify: exclusion expansion too large");
      for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
        std::string w = base;
        for (std::size_t j = 0; j < free.size(); ++j) w[free[j]] = ((mask >> j) & 1U) ? '1' : '0';
        excluded.push_back(std::move(w));
      }
    }
  }
  return CoTree::from_excluded(std::move(excluded));
}

}  // namespace lvc
