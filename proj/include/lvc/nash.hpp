#pragma once

// Bimatrix games with exact rational payoffs. A and B are m x n; the row
// player mixes x over m rows, the column player y over n columns, and the
// payoffs are x^T A y and x^T B y.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lvc/numeric.hpp"
#include "lvc/rdiv.hpp"

namespace lvc {

using Matrix = std::vector<std::vector<Rational>>;
using Vector = std::vector<Rational>;

struct BimatrixGame {
  Matrix A;
  Matrix B;

  std::size_t rows() const { return A.size(); }
  std::size_t cols() const { return A.empty() ? 0 : A.front().size(); }

  static BimatrixGame make(Matrix a, Matrix b) {
    if (a.empty() || a.front().empty()) throw std::invalid_argument("game: matrices must be at least 1x1");
    const std::size_t n = a.front().size();
    if (b.size() != a.size()) throw std::invalid_argument("game: A and B differ in shape");
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].size() != n || b[i].size() != n) throw std::invalid_argument("game: ragged or mismatched rows");
    return BimatrixGame{std::move(a), std::move(b)};
  }
};

struct StrategyPair {
  Vector x;
  Vector y;

  /// Checks nonnegativity and exact unit sums.
  static StrategyPair make(Vector x, Vector y) {
    for (const Vector* v : {&x, &y}) {
      if (v->empty()) throw std::invalid_argument("strategy: empty vector");
      Rational sum = 0;
      for (const auto& e : *v) {
        if (e < 0) throw std::invalid_argument("strategy: negative entry");
        sum += e;
      }
      if (sum != 1) throw std::invalid_argument("strategy: entries do not sum to 1");
    }
    return StrategyPair{std::move(x), std::move(y)};
  }
  friend bool operator==(const StrategyPair&, const StrategyPair&) = default;
};

/// No pure deviation improves either payoff.
inline bool nash_verify(const BimatrixGame& g, const StrategyPair& s) {
  if (s.x.size() != g.rows() || s.y.size() != g.cols()) throw std::invalid_argument("nash_verify: shape mismatch");
  const std::size_t m = g.rows(), n = g.cols();
  Vector ay(m, 0), xb(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ay[i] += g.A[i][j] * s.y[j];
      xb[j] += s.x[i] * g.B[i][j];
    }
  Rational xay = 0, xby = 0;
  for (std::size_t i = 0; i < m; ++i) xay += s.x[i] * ay[i];
  for (std::size_t j = 0; j < n; ++j) xby += xb[j] * s.y[j];
  return std::all_of(ay.begin(), ay.end(), [&](const Rational& v) { return xay >= v; }) &&
         std::all_of(xb.begin(), xb.end(), [&](const Rational& v) { return xby >= v; });
}

/// A = (1 -1; -1 a), B = (-1 1; 1 -1), with unique equilibrium
/// x = (1/2, 1/2), y = ((1+a)/(3+a), 2/(3+a)).
inline std::pair<BimatrixGame, StrategyPair> nash_2x2_family(const Rational& a) {
  if (a < 0 || a > 1) throw std::invalid_argument("nash_2x2_family: a outside [0,1]");
  auto g = BimatrixGame::make({{1, -1}, {-1, a}}, {{-1, 1}, {1, -1}});
  auto s = StrategyPair::make({make_rational(1, 2), make_rational(1, 2)}, {(1 + a) / (3 + a), 2 / (3 + a)});
  return {std::move(g), std::move(s)};
}

/// Inverse of the family's y_1: a = 2 y_1 / (1 - y_1) - 1.
inline Rational nash_family_parameter(const Rational& y1) {
  if (y1 >= 1) throw std::invalid_argument("nash_family_parameter: y1 must be below 1");
  return 2 * y1 / (1 - y1) - 1;
}

/// num/den for |num| <= |den|, den != 0, through robust division.
inline Rational guarded_divide(const Rational& num, const Rational& den) {
  const Rational an = abs(num), ad = abs(den);
  const Rational scale = std::max(an, ad);
  const Rational q = rdiv(an / scale, ad / scale);
  return sign(num) * sign(den) < 0 ? Rational(-q) : q;
}

/// Solves rows * v = rhs for a probability vector v (entries in [0,1]).
/// Returns nothing when the system is inconsistent, has more than one
/// solution, or its solution leaves [0,1].
inline std::optional<Vector> solve_probability_system(Matrix rows, Vector rhs, std::size_t unknowns) {
  const std::size_t eqs = rows.size();
  std::vector<std::size_t> pivot_row_of(unknowns);
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns; ++c) {
    std::size_t best = r;
    for (std::size_t i = r; i < eqs; ++i)
      if (abs(rows[i][c]) > abs(rows[best][c])) best = i;
    if (r >= eqs || rows[best][c] == 0) return std::nullopt;  // free variable
    std::swap(rows[r], rows[best]);
    std::swap(rhs[r], rhs[best]);
    for (std::size_t i = r + 1; i < eqs; ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = guarded_divide(rows[i][c], rows[r][c]);
      for (std::size_t j = c; j < unknowns; ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_row_of[c] = r++;
  }
  for (std::size_t i = r; i < eqs; ++i)
    if (rhs[i] != 0) return std::nullopt;  // inconsistent
  Vector v(unknowns, 0);
  for (std::size_t c = unknowns; c-- > 0;) {
    const std::size_t i = pivot_row_of[c];
    Rational acc = rhs[i];
    for (std::size_t j = c + 1; j < unknowns; ++j) acc -= rows[i][j] * v[j];
    const Rational& p = rows[i][c];
    if (acc != 0 && (sign(acc) != sign(p) || abs(acc) > abs(p))) return std::nullopt;
    v[c] = guarded_divide(acc, p);
  }
  return v;
}

/// Mixed strategy over `support` (indices into `payoff` columns) making the
/// opponent indifferent among `opp_support`: payoff rows are the opponent's
/// options, columns our own.
inline std::optional<Vector> indifference_solution(const Matrix& payoff, const std::vector<std::size_t>& opp_support,
                                                   const std::vector<std::size_t>& support) {
  Matrix rows;
  Vector rhs;
  for (std::size_t k = 1; k < opp_support.size(); ++k) {
    std::vector<Rational> row;
    for (auto j : support) row.push_back(payoff[opp_support[k]][j] - payoff[opp_support[0]][j]);
    rows.push_back(std::move(row));
    rhs.emplace_back(0);
  }
  rows.emplace_back(support.size(), Rational(1));
  rhs.emplace_back(1);
  return solve_probability_system(std::move(rows), std::move(rhs), support.size());
}

/// All size-k subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k == 0 || k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i-- > 0 && cur[i] == n - k + i) {}
    if (i == static_cast<std::size_t>(-1)) return out;
    ++cur[i];
    for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

struct NashResult {
  std::optional<StrategyPair> equilibrium;
  std::vector<std::size_t> row_support;
  std::vector<std::size_t> col_support;
  std::size_t examined = 0;
};

/// Support enumeration ordered by total support size, then row-support
/// size, then row support and column support lexicographically. Supports
/// whose indifference systems are singular are skipped.
inline NashResult nash_solve(const BimatrixGame& g) {
  const std::size_t m = g.rows(), n = g.cols();
  // B^T: rows are column-player options.
  Matrix bt(n, Vector(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) bt[j][i] = g.B[i][j];
  NashResult res;
  for (std::size_t total = 2; total <= m + n; ++total) {
    for (std::size_t k = 1; k <= std::min(m, total - 1); ++k) {
      const std::size_t l = total - k;
      if (l > n) continue;
      for (const auto& rs : index_subsets(m, k)) {
        for (const auto& cs : index_subsets(n, l)) {
          ++res.examined;
          auto yv = indifference_solution(g.A, rs, cs);
          if (!yv) continue;
          auto xv = indifference_solution(bt, cs, rs);
          if (!xv) continue;
          Vector x(m, 0), y(n, 0);
          for (std::size_t i = 0; i < k; ++i) x[rs[i]] = (*xv)[i];
          for (std::size_t j = 0; j < l; ++j) y[cs[j]] = (*yv)[j];
          auto s = StrategyPair::make(std::move(x), std::move(y));
          if (!nash_verify(g, s)) continue;
          res.equilibrium = std::move(s);
          res.row_support = rs;
          res.col_support = cs;
          return res;
        }
      }
    }
  }
  return res;
}

}  // namespace lvc
