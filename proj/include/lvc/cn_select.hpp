#pragma once

// Choice on the naturals from negative information, with finitely many mind
// changes. The input enumerates the complement of a nonempty set B; the
// guess is always the least natural not yet enumerated.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lvc/sierpinski.hpp"
#include "lvc/stream.hpp"

namespace lvc {

/// Enumeration of N \ B; an empty entry means nothing was enumerated at that step.
using NatEnumeration = Stream<std::optional<std::uint64_t>>;

struct MindChange {
  std::uint64_t value;
  /// Step at which the guess was adopted; 0 for the initial guess.
  std::size_t step;
  friend bool operator==(const MindChange&, const MindChange&) = default;
};

using MindChangeLog = std::vector<MindChange>;

enum class CnStatus { Guessing, Exhausted };

struct CnOutcome {
  CnStatus status = CnStatus::Guessing;
  std::uint64_t guess = 0;
  MindChangeLog log;
  std::size_t steps = 0;

  std::size_t mind_changes() const { return log.empty() ? 0 : log.size() - 1; }
};

/// Reads one enumeration entry per step. A retracted guess g is replaced by
/// the least non-enumerated value above g. Reports Exhausted once more than
/// `mind_change_limit` mind changes occurred.
inline CnOutcome cn_select(const NatEnumeration& complement, RunBudget budget,
                           std::size_t mind_change_limit = std::numeric_limits<std::size_t>::max()) {
  CnOutcome out;
  std::unordered_set<std::uint64_t> seen;
  out.log.push_back({0, 0});
  for (std::size_t t = 1; t <= budget.fuel; ++t) {
    out.steps = t;
    auto v = complement[t - 1];
    if (!v) continue;
    seen.insert(*v);
    if (*v != out.guess) continue;
    do ++out.guess;
    while (seen.count(out.guess));
    out.log.push_back({out.guess, t});
    if (out.mind_changes() > mind_change_limit) {
      out.status = CnStatus::Exhausted;
      return out;
    }
  }
  return out;
}

/// Enumeration of the given finite list followed by silence.
inline NatEnumeration finite_enumeration(std::vector<std::uint64_t> values) {
  return NatEnumeration([v = std::move(values)](std::size_t i) {
    return i < v.size() ? std::optional<std::uint64_t>(v[i]) : std::nullopt;
  });
}

}  // namespace lvc
