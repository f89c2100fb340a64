#pragma once

// Las Vegas machines: a compute transducer and a failure monitor reading the
// same input and advice. Both are stepped in lockstep, monitor first. A run
// ends in one of three ways:
//   Succeeding  out_len symbols emitted and the monitor has not fired
//   Failed      the monitor fired at the reported step
//   Exhausted   fuel ran out first
// Only Failed is recognized failure; Exhausted says nothing about the advice.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "lvc/advice.hpp"
#include "lvc/numeric.hpp"
#include "lvc/sierpinski.hpp"
#include "lvc/stream.hpp"

namespace lvc {

struct Unit {
  friend bool operator==(Unit, Unit) { return true; }
};

enum class EmissionKind { Silent, Emit, Stalled };

/// One compute step: nothing yet, one symbol, or a promise never to emit again.
template <class Symbol>
struct Emission {
  EmissionKind kind = EmissionKind::Silent;
  std::optional<Symbol> symbol;

  static Emission silent() { return {}; }
  static Emission emit(Symbol s) { return {EmissionKind::Emit, std::move(s)}; }
  static Emission stalled() { return {EmissionKind::Stalled, std::nullopt}; }
};

/// One monitor step. Dormant promises the monitor never fires again.
enum class Signal { Clear, Fired, Dormant };

template <class Input, class Symbol>
struct LasVegasMachine {
  using ComputeStep = std::function<Emission<Symbol>()>;
  using MonitorStep = std::function<Signal()>;

  AdviceSpace advice_space = AdviceSpace::cantor();
  /// Fresh stateful compute transducer for (input, raw advice bits).
  std::function<ComputeStep(const Input&, const Bits&)> compute;
  /// Fresh stateful failure monitor for (input, raw advice bits).
  std::function<MonitorStep(const Input&, const Bits&)> monitor;
};

enum class RunStatus { Succeeding, Failed, Exhausted };

inline const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Succeeding: return "succeeding";
    case RunStatus::Failed: return "failed";
    case RunStatus::Exhausted: return "exhausted";
  }
  return "?";
}

template <class Symbol>
struct RunOutcome {
  RunStatus status = RunStatus::Exhausted;
  std::vector<Symbol> output;
  /// Steps used; for Failed, the step at which the monitor fired.
  std::size_t steps = 0;

  friend bool operator==(const RunOutcome&, const RunOutcome&) = default;
};

template <class Input, class Symbol>
RunOutcome<Symbol> lv_run(const LasVegasMachine<Input, Symbol>& m, const Input& input, const Bits& advice,
                          std::size_t out_len, RunBudget budget) {
  RunOutcome<Symbol> r;
  if (budget.fuel == 0) return r;
  auto compute = m.compute(input, advice);
  auto monitor = m.monitor(input, advice);
  bool stalled = false, dormant = false;
  for (std::size_t t = 1; t <= budget.fuel; ++t) {
    if (stalled && dormant) break;
    if (!dormant) {
      Signal s = monitor();
      if (s == Signal::Fired) {
        r.status = RunStatus::Failed;
        r.steps = t;
        return r;
      }
      dormant = s == Signal::Dormant;
    }
    if (!stalled && r.output.size() < out_len) {
      auto e = compute();
      if (e.kind == EmissionKind::Emit) r.output.push_back(std::move(*e.symbol));
      stalled = e.kind == EmissionKind::Stalled;
    }
    if (r.output.size() >= out_len) {
      r.status = RunStatus::Succeeding;
      r.steps = t;
      return r;
    }
  }
  r.status = RunStatus::Exhausted;
  r.steps = budget.fuel;
  return r;
}

template <class Symbol>
struct RestartResult {
  RunOutcome<Symbol> outcome;
  std::size_t restarts = 0;
  /// Seed of the advice used by the final run.
  std::uint64_t advice_seed = 0;
};

/// Run j uses the advice seeded with subseed(seed, j). Resamples only on Failed.
template <class Input, class Symbol>
RestartResult<Symbol> lv_restart_loop(const LasVegasMachine<Input, Symbol>& m, const Input& input, std::uint64_t seed,
                                      RunBudget fuel_per_run, std::size_t max_restarts, std::size_t out_len) {
  if (!m.advice_space.samplable()) throw std::invalid_argument("lv_restart_loop: advice space is not samplable");
  RestartResult<Symbol> res;
  for (std::size_t j = 0;; ++j) {
    res.advice_seed = subseed(seed, j);
    res.outcome = lv_run(m, input, seeded_bits(res.advice_seed), out_len, fuel_per_run);
    res.restarts = j;
    if (res.outcome.status != RunStatus::Failed || j == max_restarts) return res;
  }
}

/// Two-sided 99% Wilson score interval for `successes` out of `n`, rounded
/// outward to multiples of 2^-32 and clipped to [0,1].
inline std::pair<Rational, Rational> wilson99(std::size_t successes, std::size_t n) {
  if (n == 0) return {Rational(0), Rational(1)};
  const Rational z = make_rational(25758293, 10'000'000);  // upper 0.5% normal quantile, rounded up
  const Rational z2 = z * z;
  const Rational nn(static_cast<long long>(n));
  const Rational p = make_rational(static_cast<long long>(successes), static_cast<long long>(n));
  const Rational denom = 1 + z2 / nn;
  const Rational center = (p + z2 / (2 * nn)) / denom;
  const Rational radicand = p * (1 - p) / nn + z2 / (4 * nn * nn);
  const Rational root_hi = sqrt_bounds(radicand, 40).second.to_rational();
  const Rational half = z * root_hi / denom;
  Rational lo = Dyadic::floor_of(center - half, 32).to_rational();
  Rational hi = -Dyadic::floor_of(-(center + half), 32).to_rational();
  if (lo < 0) lo = 0;
  if (hi > 1) hi = 1;
  return {lo, hi};
}

struct SuccessEstimate {
  std::size_t trials = 0;
  std::size_t succeeded = 0;
  std::size_t failed = 0;
  std::size_t exhausted = 0;
  /// succeeded / (trials - exhausted); 0 when every trial was exhausted.
  Rational estimate = 0;
  /// succeeded / trials, counting exhausted runs as non-successes.
  Rational success_frequency = 0;
  /// Wilson interval for `estimate`.
  Rational wilson_lo = 0;
  Rational wilson_hi = 1;
};

inline SuccessEstimate make_estimate(std::size_t succeeded, std::size_t failed, std::size_t exhausted) {
  SuccessEstimate e;
  e.trials = succeeded + failed + exhausted;
  e.succeeded = succeeded;
  e.failed = failed;
  e.exhausted = exhausted;
  const std::size_t decided = succeeded + failed;
  if (decided > 0)
    e.estimate = make_rational(static_cast<long long>(succeeded), static_cast<long long>(decided));
  if (e.trials > 0)
    e.success_frequency = make_rational(static_cast<long long>(succeeded), static_cast<long long>(e.trials));
  std::tie(e.wilson_lo, e.wilson_hi) = wilson99(succeeded, decided);
  return e;
}

/// Trial i runs on the advice seeded with subseed(seed, i).
template <class Input, class Symbol>
SuccessEstimate lv_estimate_success(const LasVegasMachine<Input, Symbol>& m, const Input& input, std::size_t trials,
                                    std::uint64_t seed, RunBudget fuel, std::size_t out_len) {
  if (!m.advice_space.samplable()) throw std::invalid_argument("lv_estimate_success: advice space is not samplable");
  std::size_t s = 0, f = 0, x = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    switch (lv_run(m, input, seeded_bits(subseed(seed, i)), out_len, fuel).status) {
      case RunStatus::Succeeding: ++s; break;
      case RunStatus::Failed: ++f; break;
      case RunStatus::Exhausted: ++x; break;
    }
  }
  return make_estimate(s, f, x);
}

/// Thrown by a composed machine's intermediate stream when the inner machine cannot supply a symbol.
struct Starved {};

/// Runs g on the right half of the advice and feeds its output, pulled on
/// demand, to f running on the left half. The composed monitor fires when
/// g's monitor fires or, g being clear, when f's does.
template <class In, class Mid, class Out>
LasVegasMachine<In, Out> lv_compose(LasVegasMachine<Stream<Mid>, Out> f, LasVegasMachine<In, Mid> g,
                                    std::size_t pull_limit = 1 << 16) {
  struct Pipe {
    typename LasVegasMachine<In, Mid>::ComputeStep step;
    std::vector<Mid> buffer;
    std::size_t pulls = 0;
    bool stalled = false;
  };
  auto intermediate = [g, pull_limit](const In& input, const Bits& advice) {
    auto pipe = std::make_shared<Pipe>();
    pipe->step = g.compute(input, project_right(advice));
    return Stream<Mid>([pipe, pull_limit](std::size_t n) -> Mid {
      while (pipe->buffer.size() <= n) {
        if (pipe->stalled || pipe->pulls >= pull_limit) throw Starved{};
        ++pipe->pulls;
        auto e = pipe->step();
        if (e.kind == EmissionKind::Emit) pipe->buffer.push_back(std::move(*e.symbol));
        pipe->stalled = e.kind == EmissionKind::Stalled;
      }
      return pipe->buffer[n];
    });
  };

  LasVegasMachine<In, Out> h;
  h.advice_space = AdviceSpace::cantor();
  h.compute = [f, intermediate](const In& input, const Bits& advice) {
    auto step = f.compute(intermediate(input, advice), project_left(advice));
    return typename LasVegasMachine<In, Out>::ComputeStep([step]() mutable -> Emission<Out> {
      try {
        return step();
      } catch (const Starved&) {
        return Emission<Out>::stalled();
      }
    });
  };
  h.monitor = [f, g, intermediate](const In& input, const Bits& advice) {
    auto gm = g.monitor(input, project_right(advice));
    auto fm = f.monitor(intermediate(input, advice), project_left(advice));
    bool g_dormant = false, f_dormant = false;
    return typename LasVegasMachine<In, Out>::MonitorStep([=]() mutable {
      if (!g_dormant) {
        Signal s = gm();
        if (s == Signal::Fired) return Signal::Fired;
        g_dormant = s == Signal::Dormant;
      }
      if (!f_dormant) {
        Signal s;
        try {
          s = fm();
        } catch (const Starved&) {
          s = Signal::Dormant;
        }
        if (s == Signal::Fired) return Signal::Fired;
        f_dormant = s == Signal::Dormant;
      }
      return g_dormant && f_dormant ? Signal::Dormant : Signal::Clear;
    });
  };
  return h;
}

/// Copies its input stream; never fails.
template <class T>
LasVegasMachine<Stream<T>, T> lv_identity() {
  LasVegasMachine<Stream<T>, T> m;
  m.compute = [](const Stream<T>& in, const Bits&) {
    return typename LasVegasMachine<Stream<T>, T>::ComputeStep(
        [in, i = std::size_t{0}]() mutable { return Emission<T>::emit(in[i++]); });
  };
  m.monitor = [](const Stream<T>&, const Bits&) {
    return typename LasVegasMachine<Stream<T>, T>::MonitorStep([] { return Signal::Dormant; });
  };
  return m;
}

/// Runs m on a fixed input, disregarding the input it is given.
template <class NewInput, class Input, class Symbol>
LasVegasMachine<NewInput, Symbol> lv_ignore_input(LasVegasMachine<Input, Symbol> m, Input fixed) {
  LasVegasMachine<NewInput, Symbol> r;
  r.advice_space = m.advice_space;
  r.compute = [m, fixed](const NewInput&, const Bits& a) { return m.compute(fixed, a); };
  r.monitor = [m, fixed](const NewInput&, const Bits& a) { return m.monitor(fixed, a); };
  return r;
}

/// Lifts a machine over Unit to one over streams of any symbol type.
template <class Mid, class Symbol>
LasVegasMachine<Stream<Mid>, Symbol> lv_on_stream(LasVegasMachine<Unit, Symbol> m) {
  return lv_ignore_input<Stream<Mid>>(std::move(m), Unit{});
}

}  // namespace lvc
