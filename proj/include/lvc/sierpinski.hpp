#pragma once

// Semi-decidable observations. A Sierpinski cell is 0 until some finite
// step at which an event is seen, and 1 from then on. Fuel bounds how long
// we are willing to watch.

#include <cstddef>
#include <functional>
#include <optional>

namespace lvc {

/// Maximum number of primitive steps an operation may perform.
struct RunBudget {
  std::size_t fuel = 1'000'000;
};

class SierpinskiCell {
 public:
  bool observed() const { return step_.has_value(); }
  /// Step at which the event was first seen.
  std::optional<std::size_t> step() const { return step_; }

  /// Records an event at step t. Later observations never revert or move the step.
  void observe(std::size_t t) {
    if (!step_) step_ = t;
  }

 private:
  std::optional<std::size_t> step_;
};

struct Observation {
  std::optional<std::size_t> fired_at;  // ObservedOne(step)
  std::size_t fuel = 0;                  // NotYetAfter(fuel) when fired_at is empty

  bool observed() const { return fired_at.has_value(); }
};

/// Watches `event(t)` for t = 1..fuel and reports the first step at which it holds.
inline Observation sierp_observe(const std::function<bool(std::size_t)>& event, RunBudget budget) {
  SierpinskiCell cell;
  for (std::size_t t = 1; t <= budget.fuel && !cell.observed(); ++t)
    if (event(t)) cell.observe(t);
  return {cell.step(), budget.fuel};
}

}  // namespace lvc
