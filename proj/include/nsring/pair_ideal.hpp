#pragma once

#include "nsring/coefficients.hpp"

namespace nsring {

// The ideal t^a V x t^b V of the idealization A = V x V of a discrete
// valuation ring V = k[[t]] over itself. The ideal condition is b <= a, and
// l(A / (t^a V x t^b V)) = a + b. This ring is not reduced, so its
// coefficient set is unbounded; the pair family realizes every e1 = a - b.
class PairIdeal {
 public:
  PairIdeal(Int a, Int b) : a_(a), b_(b) {
    if (a < 1 || b < 0 || b > a) throw invalid_pair(a, b);
  }

  Int a() const { return a_; }
  Int b() const { return b_; }
  Int colength() const { return a_ + b_; }

  // (t^{a1} V x t^{b1} V)(t^{a2} V x t^{b2} V)
  //   = t^{a1+a2} V x t^{min(a1+b2, a2+b1)} V.
  friend PairIdeal operator*(const PairIdeal& p, const PairIdeal& q) {
    return PairIdeal(p.a_ + q.a_, std::min(p.a_ + q.b_, q.a_ + p.b_));
  }

  bool operator==(const PairIdeal& o) const = default;

 private:
  Int a_;
  Int b_;
};

inline PairIdeal pair_power(const PairIdeal& P, Int k) {
  if (k < 1) throw input_error("power exponent must be >= 1");
  PairIdeal out = P;
  for (Int i = 1; i < k; ++i) out = out * P;
  return out;
}

// Closed form P^k = (k a, (k-1) a + b).
inline PairIdeal pair_power_closed_form(const PairIdeal& P, Int k) {
  if (k < 1) throw input_error("power exponent must be >= 1");
  return PairIdeal(k * P.a(), (k - 1) * P.a() + P.b());
}

struct PairIdealReport {
  std::vector<Int> table;  // l(A / P^{k+1}) for k = 0..n_max
  Int e0 = 0;
  Int e1 = 0;
};

// Builds the Hilbert table by repeated products and fits it. The fit must
// come out as e0 = 2a and e1 = a - b; a mismatch throws.
inline PairIdealReport pair_ideal_report(const PairIdeal& P, Int n_max) {
  if (n_max < 2) throw window_too_small(n_max, 2);
  std::vector<Int> table;
  table.reserve(static_cast<std::size_t>(n_max) + 1);
  PairIdeal power = P;
  for (Int k = 0; k <= n_max; ++k) {
    table.push_back(power.colength());
    power = power * P;
  }
  const auto fit = detail::fit_eventually_linear(table);
  if (fit.e0 != 2 * P.a() || fit.e1 != P.a() - P.b())
    throw formula_mismatch("pair ideal (" + std::to_string(P.a()) + ", " +
                           std::to_string(P.b()) + "): fitted (e0, e1) = (" +
                           std::to_string(fit.e0) + ", " +
                           std::to_string(fit.e1) + "), expected (" +
                           std::to_string(2 * P.a()) + ", " +
                           std::to_string(P.a() - P.b()) + ")");
  return PairIdealReport{std::move(table), fit.e0, fit.e1};
}

}  // namespace nsring
