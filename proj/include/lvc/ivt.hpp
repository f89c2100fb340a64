#pragma once

// Zeros of piecewise-linear functions with a sign change.
//
// Trisection keeps [a,b] with f(a) f(b) < 0 and probes c1 = a + (b-a)/3 and
// c2 = a + 2(b-a)/3. In round r a probe's sign counts as seen once
// |f(c)| > 2^-r; each probe evaluation is one step. After a round with at
// least one seen sign, [a,b] shrinks to the leftmost of [a,c1], [c1,c2],
// [c2,b] whose endpoint signs are seen and differ. If both probes are zero,
// no round ever sees a sign: the run is stalled on a zero plateau.
//
// The probabilistic algorithm reads a bit b and a point x from its advice.
// With b = 0 it emits binary approximations of x and fails once f is seen
// to be nonzero near x. With b = 1 it runs trisection and cannot recognize
// its own failure, so a stall is reported as exhaustion.

#include <cstddef>
#include <memory>
#include <string>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lvc/cotree.hpp"
#include "lvc/machine.hpp"
#include "lvc/numeric.hpp"
#include "lvc/pwl.hpp"
#include "lvc/sierpinski.hpp"
#include "lvc/signed_digit.hpp"

namespace lvc {

inline void require_sign_change(const PwlFunction& f) {
  if (!pwl_has_sign_change(f)) throw std::invalid_argument("ivt: need f(0) * f(1) < 0");
}

class Trisector {
 public:
  enum class Event { Probed, Shrunk, Plateau };

  explicit Trisector(PwlFunction f) : f_(std::move(f)) {
    require_sign_change(f_);
    sa_ = sign(pwl_eval(f_, 0));
    start_round();
  }

  const Interval& interval() const { return iv_; }
  std::size_t shrinks() const { return shrinks_; }

  /// One probe evaluation.
  Event step() {
    if (plateau_) return Event::Plateau;
    const std::size_t p = probe_++;
    const Rational v = pwl_eval(f_, probes_[p]);
    if (abs(v) > threshold_) seen_[p] = sign(v);
    if (probe_ < 2) return Event::Probed;
    if (seen_[0] || seen_[1]) {
      shrink();
      ++round_;
      start_round();
      return Event::Shrunk;
    }
    if (pwl_eval(f_, probes_[0]) == 0 && v == 0) {
      plateau_ = true;
      return Event::Plateau;
    }
    ++round_;
    probe_ = 0;
    threshold_ = rational_pow2(-static_cast<std::int64_t>(round_));
    return Event::Probed;
  }

 private:
  void start_round() {
    const Rational third = iv_.length() / 3;
    probes_[0] = iv_.lo + third;
    probes_[1] = iv_.lo + 2 * third;
    seen_[0] = seen_[1] = 0;
    probe_ = 0;
    threshold_ = rational_pow2(-static_cast<std::int64_t>(round_));
  }

  void shrink() {
    const Rational pts[4] = {iv_.lo, probes_[0], probes_[1], iv_.hi};
    const int sg[4] = {sa_, seen_[0], seen_[1], -sa_};
    int last = 0;  // index of the last point with a seen sign
    for (int j = 1; j < 4; ++j) {
      if (sg[j] == 0) continue;
      if (sg[j] != sg[last]) {
        iv_ = Interval{pts[last], pts[j]};
        sa_ = sg[last];
        ++shrinks_;
        return;
      }
      last = j;
    }
    throw std::logic_error("trisection lost its sign change");
  }

  PwlFunction f_;
  Interval iv_{0, 1};
  int sa_ = 0;
  Rational probes_[2];
  int seen_[2] = {0, 0};
  std::size_t probe_ = 0;
  std::size_t round_ = 1;
  Rational threshold_;
  std::size_t shrinks_ = 0;
  bool plateau_ = false;
};

enum class TrisectStatus { Zero, Stalled };

struct TrisectOutcome {
  TrisectStatus status = TrisectStatus::Stalled;
  /// Within 2^-k of a zero when status is Zero.
  Dyadic value;
  Interval interval{0, 1};
  /// Stalled on a proven zero plateau, as opposed to running out of fuel.
  bool plateau = false;
  std::size_t shrinks = 0;
  std::size_t steps = 0;
};

inline TrisectOutcome ivt_trisect(const PwlFunction& f, std::size_t k, RunBudget budget) {
  Trisector tri(f);
  TrisectOutcome out;
  const Rational target = rational_pow2(-static_cast<std::int64_t>(k));
  auto finish_zero = [&] {
    out.status = TrisectStatus::Zero;
    out.value = Dyadic::nearest(tri.interval().midpoint(), static_cast<std::int64_t>(k) + 2);
  };
  if (tri.interval().length() <= target) finish_zero();
  while (out.status != TrisectStatus::Zero && out.steps < budget.fuel) {
    ++out.steps;
    auto e = tri.step();
    if (e == Trisector::Event::Plateau) {
      out.plateau = true;
      break;
    }
    if (e == Trisector::Event::Shrunk && tri.interval().length() <= target) finish_zero();
  }
  out.interval = tri.interval();
  out.shrinks = tri.shrinks();
  return out;
}

/// Symbols form a Cauchy name (symbol i within 2^-i of the result); a run
/// needs k+1 symbols. Advice bit 0 is b, the rest names x.
inline LasVegasMachine<PwlFunction, Dyadic> ivt_machine() {
  using M = LasVegasMachine<PwlFunction, Dyadic>;
  M m;
  m.advice_space = AdviceSpace::cantor();
  m.compute = [](const PwlFunction& f, const Bits& advice) -> M::ComputeStep {
    require_sign_change(f);
    if (advice[0] == 0) {
      const Bits x = drop(advice, 1);
      return [x, i = std::size_t{0}]() mutable { return Emission<Dyadic>::emit(binary_approx(x, i++)); };
    }
    auto tri = std::make_shared<Trisector>(f);
    return [tri, next = std::size_t{0}, stalled = false]() mutable {
      if (stalled) return Emission<Dyadic>::stalled();
      const Rational need = rational_pow2(-static_cast<std::int64_t>(next));
      if (tri->interval().length() <= need)
        return Emission<Dyadic>::emit(Dyadic::nearest(tri->interval().midpoint(), static_cast<std::int64_t>(next++) + 2));
      if (tri->step() == Trisector::Event::Plateau) {
        stalled = true;
        return Emission<Dyadic>::stalled();
      }
      return Emission<Dyadic>::silent();
    };
  };
  m.monitor = [](const PwlFunction& f, const Bits& advice) -> M::MonitorStep {
    if (advice[0] == 1) return [] { return Signal::Dormant; };
    const Bits x = drop(advice, 1);
    return [f, x, t = std::size_t{0}]() mutable {
      ++t;
      const Rational lo = binary_approx(x, t).to_rational();
      const Interval range = pwl_range(f, {lo, lo + rational_pow2(-static_cast<std::int64_t>(t))});
      return (range.lo > 0 || range.hi < 0) ? Signal::Fired : Signal::Clear;
    };
  };
  return m;
}

inline RunOutcome<Dyadic> ivt_probabilistic(const PwlFunction& f, const Bits& advice, std::size_t k,
                                            RunBudget budget) {
  return lv_run(ivt_machine(), f, advice, k + 1, budget);
}

struct ConvergingTree {
  CoTree tree;
  /// k maximal with m_n < 2^-k, if any, capped at depth - 2 so the hedge stays observable.
  std::optional<std::size_t> hedge_depth;
};

/// Stage n of the tree sequence for a closed interval I given by nested
/// rational approximations, observed to depth D. The 0-branch excludes
/// every 0w (|0w| <= D) whose binary cylinder misses I_n / 2; the 1-branch
/// is cut to 1{0,1}^k, k maximal with |I_n| < 2^-k, or removed if no such k
/// exists. Exclusions longer than D are left out.
inline ConvergingTree ivt_tree_sequence(const std::vector<Interval>& approx, std::size_t n, std::size_t depth) {
  if (n >= approx.size()) throw std::invalid_argument("ivt_tree_sequence: stage beyond the given approximations");
  if (depth > 20) throw std::invalid_argument("ivt_tree_sequence: observation depth above 20");
  for (std::size_t i = 0; i <= n; ++i) {
    if (approx[i].lo > approx[i].hi || approx[i].lo < 0 || approx[i].hi > 1)
      throw std::invalid_argument("ivt_tree_sequence: approximation is not an interval inside [0,1]");
    if (i > 0 && !approx[i - 1].contains(approx[i]))
      throw std::invalid_argument("ivt_tree_sequence: approximations are not nested");
  }
  const Interval half{approx[n].lo / 2, approx[n].hi / 2};
  std::vector<std::string> excluded;
  for (std::size_t len = 1; len <= depth; ++len) {
    for (std::size_t w = 0; w < (std::size_t{1} << (len - 1)); ++w) {
      std::string word = "0";
      BigInt mant = 0;
      for (std::size_t j = 0; j + 1 < len; ++j) {
        const bool bit = (w >> (len - 2 - j)) & 1U;
        word.push_back(bit ? '1' : '0');
      }
      for (char c : word) mant = 2 * mant + (c - '0');
      const Rational lo = make_rational(mant, pow2(static_cast<std::int64_t>(len)));
      const Interval cyl{lo, lo + rational_pow2(-static_cast<std::int64_t>(len))};
      if (cyl.disjoint_from(half)) excluded.push_back(std::move(word));
    }
  }
  ConvergingTree out;
  const Rational m = approx[n].length();
  if (m >= 1) {
    excluded.emplace_back("1");
  } else {
    std::size_t k = 0;
    while (k + 3 <= depth && m < rational_pow2(-static_cast<std::int64_t>(k) - 1)) ++k;
    out.hedge_depth = k;
    if (k + 2 <= depth)
      for (std::size_t v = 0; v < (std::size_t{1} << (k + 1)); ++v) {
        std::string word = "1";
        for (std::size_t j = 0; j <= k; ++j) word.push_back(((v >> (k - j)) & 1U) ? '1' : '0');
        excluded.push_back(std::move(word));
      }
  }
  out.tree = CoTree::from_excluded(std::move(excluded));
  return out;
}

}  // namespace lvc
