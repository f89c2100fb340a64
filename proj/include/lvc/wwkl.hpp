#pragma once

// Path sampling for trees of positive measure: the advice is the candidate
// path, and failure is seen as soon as one of its prefixes is excluded.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>

#include "lvc/cotree.hpp"
#include "lvc/machine.hpp"
#include "lvc/sierpinski.hpp"
#include "lvc/stream.hpp"

namespace lvc {

enum class WwklStatus { Emitting, Failed, Exhausted };

struct WwklOutcome {
  WwklStatus status = WwklStatus::Exhausted;
  /// Emitted bits; never a word with an excluded prefix.
  std::string prefix;
  /// First n with r|_n outside T (Failed only).
  std::size_t failed_at = 0;
};

/// At step t checks r|_t against the exclusions read so far (t of them for
/// lazy trees) and emits r(t-1) if it is still a member.
inline WwklOutcome wwkl_path(const CoTree& t, const Bits& r, RunBudget budget) {
  WwklOutcome out;
  if (budget.fuel == 0) return out;
  std::string w;
  for (std::size_t step = 1; step <= budget.fuel; ++step) {
    w.push_back(static_cast<char>('0' + r[step - 1]));
    if (!t.member(w, step)) {
      out.status = WwklStatus::Failed;
      out.failed_at = step;
      w.pop_back();
      out.prefix = std::move(w);
      return out;
    }
  }
  out.status = WwklStatus::Emitting;
  out.prefix = std::move(w);
  return out;
}

/// The same procedure as a machine over Cantor-space advice.
inline LasVegasMachine<CoTree, std::uint8_t> wwkl_machine() {
  using M = LasVegasMachine<CoTree, std::uint8_t>;
  M m;
  m.advice_space = AdviceSpace::cantor();
  m.compute = [](const CoTree&, const Bits& r) {
    return M::ComputeStep([r, i = std::size_t{0}]() mutable { return Emission<std::uint8_t>::emit(r[i++]); });
  };
  m.monitor = [](const CoTree& tree, const Bits& r) {
    return M::MonitorStep([tree, r, w = std::string()]() mutable {
      const std::size_t step = w.size() + 1;
      if (tree.is_finite() && w.size() >= tree.max_excluded_length()) return Signal::Dormant;
      w.push_back(static_cast<char>('0' + r[step - 1]));
      return tree.member(w, step) ? Signal::Clear : Signal::Fired;
    });
  };
  return m;
}

/// A tree-specific machine over Unit input, for composition.
inline LasVegasMachine<Unit, std::uint8_t> wwkl_machine_for(const CoTree& tree) {
  return lv_ignore_input<Unit>(wwkl_machine(), tree);
}

/// Output length after which a run on a finite tree has seen every exclusion.
inline std::size_t wwkl_decisive_length(const CoTree& t) {
  require_finite(t, "wwkl_decisive_length");
  return std::max<std::size_t>(1, t.max_excluded_length());
}

}  // namespace lvc
