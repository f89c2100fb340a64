#pragma once

// Smith-Volterra-Cantor intervals. With delta = 1 - eps, I_e = [0,1] and
// for |w| = n-1 the children of I_w = [a,b] are
//   I_{w0} = [a, a + (b-a)/2 - delta/2^{2n}]
//   I_{w1} = [a + (b-a)/2 + delta/2^{2n}, b]
// All intervals at one depth have the same length.

#include <cstddef>
#include <stdexcept>
#include <string>

#include "lvc/cotree.hpp"
#include "lvc/numeric.hpp"

namespace lvc {

inline Rational svc_delta(const Dyadic& eps) {
  Rational e = eps.to_rational();
  if (e < 0 || e >= 1) throw std::invalid_argument("svc: epsilon must lie in [0,1)");
  return 1 - e;
}

inline Interval svc_interval(const std::string& w, const Dyadic& eps) {
  require_binary_word(w);
  const Rational delta = svc_delta(eps);
  Interval iv{0, 1};
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto n = static_cast<std::int64_t>(i + 1);
    const Rational mid = iv.lo + (iv.hi - iv.lo) / 2;
    const Rational half_gap = delta / Rational(pow2(2 * n));
    if (w[i] == '0') iv.hi = mid - half_gap;
    else iv.lo = mid + half_gap;
  }
  return iv;
}

/// The nested interval I_p pinning f_eps(q) for every q extending p.
inline Interval svc_embed_prefix(const std::string& p, const Dyadic& eps) { return svc_interval(p, eps); }

/// Sum of the lengths of I_w over |w| = n: 1 - delta(1 - 2^-n).
inline Rational svc_remaining_length(const Dyadic& eps, std::size_t n) {
  const Rational delta = svc_delta(eps);
  return 1 - delta * (1 - rational_pow2(-static_cast<std::int64_t>(n)));
}

/// Sum of the lengths of I_{wv} over |v| = m: 2^-|w| (1 - delta(1 - 2^-(|w|+m))).
inline Rational svc_subtree_length(const std::string& w, const Dyadic& eps, std::size_t m) {
  require_binary_word(w);
  return rational_pow2(-static_cast<std::int64_t>(w.size())) * svc_remaining_length(eps, w.size() + m);
}

/// Lebesgue measure of f_eps(w 2^N): 2^-|w| eps.
inline Rational svc_cylinder_measure(const std::string& w, const Dyadic& eps) {
  require_binary_word(w);
  svc_delta(eps);
  return rational_pow2(-static_cast<std::int64_t>(w.size())) * eps.to_rational();
}

}  // namespace lvc
