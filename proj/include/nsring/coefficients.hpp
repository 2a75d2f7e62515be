#pragma once

#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "nsring/monomial_ideal.hpp"

namespace nsring {

// Hilbert function values H_I(n) = l(A / I^{n+1}) for n = 0..n_max.
// The values are strictly increasing and exactly linear once n reaches the
// reduction number; stabilization_index records where linearity sets in
// within the computed table.
struct HilbertTable {
  MonomialIdeal ideal;
  std::vector<Int> values;
  Int stabilization_index;
};

struct CoefficientReport {
  Int e0 = 0;
  Int e1 = 0;
  Int r = 0;  // reduction number
  NumericalSemigroup blowup;
  // e1 as computed by each route; coefficient_report asserts they agree.
  std::map<std::string, Int> methods;
  Int e0_fit = 0;
  Int e0_parameter = 0;
};

namespace detail {

struct LinearFit {
  Int e0;
  Int e1;
  Int stabilization_index;
};

// Fits values[n] = e0 (n+1) - e1 on the longest constant-difference tail.
// Requires at least 3 points on that tail.
inline LinearFit fit_eventually_linear(const std::vector<Int>& values) {
  const Int n_max = static_cast<Int>(values.size()) - 1;
  if (n_max < 2) throw not_yet_linear();
  const Int d = values[static_cast<std::size_t>(n_max)] -
                values[static_cast<std::size_t>(n_max - 1)];
  Int stab = n_max - 1;
  while (stab > 0 && values[static_cast<std::size_t>(stab)] -
                             values[static_cast<std::size_t>(stab - 1)] ==
                         d)
    --stab;
  if (n_max - stab < 2) throw not_yet_linear();
  return LinearFit{d, d * (n_max + 1) - values[static_cast<std::size_t>(n_max)],
                   stab};
}

// Powers I^1..I^{k} with their supports, grown on demand. Deques keep
// references returned by power() and support() valid across growth.
class PowerLadder {
 public:
  explicit PowerLadder(const MonomialIdeal& I) : base_(I) {
    powers_.push_back(I);
    supports_.push_back(nsring::support_set(I));
  }

  const MonomialIdeal& power(Int k) {
    grow(k);
    return powers_[static_cast<std::size_t>(k - 1)];
  }
  const CofiniteSet& support(Int k) {
    if (k == 0) {
      if (!unit_support_) unit_support_ = member_set(base_.host());
      return *unit_support_;
    }
    grow(k);
    return supports_[static_cast<std::size_t>(k - 1)];
  }

  Int colength(Int k) {
    const CofiniteSet& E = support(k);
    const NumericalSemigroup& H = base_.host();
    Int count = 0;
    for (Int z = 0; z < E.threshold(); ++z)
      if (H.contains(z) && !E.contains(z)) ++count;
    return count;
  }

  // Reduction number via E_{r+1} = min(S) + E_r.
  Int reduction_number() {
    const Int m = base_.min_exponent();
    const Int cap = base_.host().genus() + 1;
    for (Int r = 0; r <= cap; ++r)
      if (support(r + 1) == support(r).shifted(m)) return r;
    throw reduction_cap_exceeded(cap);
  }

 private:
  void grow(Int k) {
    while (static_cast<Int>(powers_.size()) < k) {
      powers_.push_back(multiply(powers_.back(), base_));
      supports_.push_back(nsring::support_set(powers_.back()));
    }
  }

  MonomialIdeal base_;
  std::deque<MonomialIdeal> powers_;
  std::deque<CofiniteSet> supports_;
  std::optional<CofiniteSet> unit_support_;
};

}  // namespace detail

inline HilbertTable hilbert_table(const MonomialIdeal& I, Int n_max) {
  detail::PowerLadder ladder(I);
  const Int r = ladder.reduction_number();
  if (n_max < r + 2) throw window_too_small(n_max, r + 2);
  std::vector<Int> values;
  values.reserve(static_cast<std::size_t>(n_max) + 1);
  for (Int n = 0; n <= n_max; ++n) {
    values.push_back(ladder.colength(n + 1));
    if (n > 0 && values[static_cast<std::size_t>(n)] <=
                     values[static_cast<std::size_t>(n - 1)])
      throw check_error("Hilbert function is not strictly increasing");
  }
  const auto fit = detail::fit_eventually_linear(values);
  if (fit.stabilization_index > r)
    throw check_error("table not linear from the reduction number on");
  return HilbertTable{I, std::move(values), fit.stabilization_index};
}

// (e0, e1) from the linear tail of the table: e0 is the constant successive
// difference and e1 = e0 (n+1) - values[n] there.
inline std::pair<Int, Int> coefficients_via_fit(const HilbertTable& T) {
  const auto fit = detail::fit_eventually_linear(T.values);
  return {fit.e0, fit.e1};
}

// e0(I) = l(A / Q) for the distinguished reduction Q = (t^{min S}).
// The count always equals min(S) for a semigroup ring.
inline Int e0_via_parameter(const MonomialIdeal& I) {
  return colength(ideal_from_exponents(I.host(), {I.min_exponent()}));
}

// e1(I) = l(I^r / Q^r) = #( support(I^r) \ (r min(S) + H) ).
inline Int e1_via_sandwich(const MonomialIdeal& I) {
  detail::PowerLadder ladder(I);
  const Int r = ladder.reduction_number();
  if (r == 0) return 0;
  const CofiniteSet shifted_host =
      member_set(I.host()).shifted(r * I.min_exponent());
  return difference_size(ladder.support(r), shifted_host);
}

// e1(I) = l(B / A) = genus(H) - genus(H_B) for the blowup B = A[I/a].
inline Int e1_via_blowup(const MonomialIdeal& I) {
  return I.host().genus() - blowup_semigroup(I).genus();
}

// Runs every route: e1 by table fit, sandwich length, and blowup genus drop;
// e0 by fit slope and by the parameter colength. Disagreement between any
// two routes throws method_disagreement; it signals a bug, never data.
inline CoefficientReport coefficient_report(const MonomialIdeal& I) {
  detail::PowerLadder ladder(I);
  const Int r = ladder.reduction_number();
  const Int m = I.min_exponent();

  std::vector<Int> values;
  for (Int n = 0; n <= r + 2; ++n) values.push_back(ladder.colength(n + 1));
  const auto fit = detail::fit_eventually_linear(values);

  const Int e1_sandwich =
      r == 0 ? 0
             : difference_size(ladder.support(r),
                               member_set(I.host()).shifted(r * m));

  const NumericalSemigroup blowup = blowup_semigroup(I);
  const Int e1_blowup = I.host().genus() - blowup.genus();
  const Int e0_parameter = e0_via_parameter(I);

  if (fit.e1 != e1_sandwich || fit.e1 != e1_blowup || fit.e0 != e0_parameter) {
    throw method_disagreement(
        "ideal (" + detail::join(I.exponents()) + ") over <" +
        detail::join(I.host().generators()) + ">: e1 fit=" +
        std::to_string(fit.e1) + " sandwich=" + std::to_string(e1_sandwich) +
        " blowup=" + std::to_string(e1_blowup) + ", e0 fit=" +
        std::to_string(fit.e0) + " parameter=" + std::to_string(e0_parameter));
  }

  CoefficientReport report;
  report.e0 = fit.e0;
  report.e1 = fit.e1;
  report.r = r;
  report.blowup = blowup;
  report.methods = {{"fit", fit.e1},
                    {"sandwich", e1_sandwich},
                    {"blowup", e1_blowup}};
  report.e0_fit = fit.e0;
  report.e0_parameter = e0_parameter;
  return report;
}

// Hilbert coefficients of I^k from those of I in dimension d:
//   e0(I^k) = k^d e0,
//   e1(I^k) = (d-1)/2 e0 k^d + (2 e1 - e0 (d-1))/2 k^{d-1}.
// For d = 1 this is (k e0, e1). Only the d = 1 branch is ever cross-checked
// against ring computations; higher d is a pure integer formula.
inline std::pair<Int, Int> predict_power_coefficients(Int e0, Int e1, Int d,
                                                      Int k) {
  if (d < 1) throw input_error("dimension must be >= 1");
  if (k < 1) throw input_error("power must be >= 1");

  using Wide = __int128;
  const auto mul = [](Wide a, Wide b) {
    Wide out;
    if (__builtin_mul_overflow(a, b, &out))
      throw input_error("power coefficients exceed the supported range");
    return out;
  };
  const auto add = [](Wide a, Wide b) {
    Wide out;
    if (__builtin_add_overflow(a, b, &out))
      throw input_error("power coefficients exceed the supported range");
    return out;
  };

  Wide kd1 = 1;  // k^{d-1}
  for (Int i = 0; i < d - 1; ++i) kd1 = mul(kd1, k);
  const Wide kd = mul(kd1, k);

  const Wide e0k = mul(kd, e0);
  const Wide numerator = add(mul(mul(d - 1, e0), kd),
                             mul(2 * Wide(e1) - mul(e0, d - 1), kd1));
  if (numerator % 2 != 0) throw non_integral_result();
  const Wide e1k = numerator / 2;

  const Wide lo = std::numeric_limits<Int>::min();
  const Wide hi = std::numeric_limits<Int>::max();
  if (e0k < lo || e0k > hi || e1k < lo || e1k > hi)
    throw input_error("power coefficients exceed the 64-bit range");
  return {static_cast<Int>(e0k), static_cast<Int>(e1k)};
}

}  // namespace nsring
