#pragma once

// Search for a cylinder in which [T] has relative measure at least 1 - 2^-k.
// Candidates are visited in shortlex order. At stage s the first s
// candidates that are still alive are bounded from above at depth
// max(s, |w|) using the exclusions enumerated so far; a candidate is
// rejected only when that bound is strictly below the threshold. The guess
// is the least live candidate. On a finite tree the bound is exact once the
// depth reaches the longest exclusion, which certifies the guess.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lvc/cotree.hpp"
#include "lvc/numeric.hpp"
#include "lvc/sierpinski.hpp"

namespace lvc {

enum class LdlStatus { Certified, Exhausted };

struct DensityWitness {
  LdlStatus status = LdlStatus::Exhausted;
  std::string word;
  /// Relative measure of [T] below `word` at the certifying depth (the latest bound if Exhausted).
  Rational relative_measure = 0;
  std::size_t rejected = 0;
  std::size_t certifying_depth = 0;
  std::size_t steps = 0;
};

/// One step per candidate bound evaluated.
inline DensityWitness ldl_search(const CoTree& t, std::size_t k, RunBudget budget) {
  const Rational threshold = 1 - rational_pow2(-static_cast<std::int64_t>(k));
  DensityWitness out;
  std::vector<bool> rejected;
  std::size_t steps = 0;
  for (std::size_t s = 1;; ++s) {
    const CoTree known = t.is_finite() ? t : t.known_after(s);
    rejected.resize(s, false);
    std::optional<std::size_t> guess;
    Rational guess_measure = 0;
    std::size_t guess_depth = 0;
    for (std::size_t i = 0; i < s; ++i) {
      if (rejected[i]) continue;
      if (steps == budget.fuel) {
        out.steps = steps;
        return out;
      }
      ++steps;
      const std::string w = shortlex_word(i);
      const std::size_t depth = std::max(s, w.size());
      const Rational rel = relative_measure_upper(known, w, depth);
      if (rel < threshold) {
        rejected[i] = true;
        ++out.rejected;
        continue;
      }
      if (!guess) {
        guess = i;
        guess_measure = rel;
        guess_depth = depth;
      }
    }
    if (!guess) continue;
    out.word = shortlex_word(*guess);
    out.relative_measure = guess_measure;
    out.certifying_depth = guess_depth;
    out.steps = steps;
    if (t.is_finite() && guess_depth >= t.max_excluded_length()) {
      out.status = LdlStatus::Certified;
      out.rejected = static_cast<std::size_t>(std::count(rejected.begin(), rejected.begin() + *guess, true));
      return out;
    }
  }
}

}  // namespace lvc
