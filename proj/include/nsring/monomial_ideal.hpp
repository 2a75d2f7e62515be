#pragma once

#include <algorithm>
#include <utility>

#include "nsring/cofinite_set.hpp"
#include "nsring/core.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

// An m-primary monomial ideal I = (t^s : s in S) of the semigroup ring
// k[[t^H]], stored as its irredundant exponent set over the host semigroup.
// Exponents are positive members of H, and no exponent lies in another
// exponent plus H.
class MonomialIdeal {
 public:
  const NumericalSemigroup& host() const { return host_; }
  const std::vector<Int>& exponents() const { return exponents_; }
  Int min_exponent() const { return exponents_.front(); }
  Int max_exponent() const { return exponents_.back(); }

  bool operator==(const MonomialIdeal& o) const {
    return host_ == o.host_ && exponents_ == o.exponents_;
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

 private:
  friend MonomialIdeal ideal_from_exponents(const NumericalSemigroup&,
                                            std::vector<Int>);
  friend MonomialIdeal multiply(const MonomialIdeal&, const MonomialIdeal&);

  MonomialIdeal(NumericalSemigroup host, std::vector<Int> exponents)
      : host_(std::move(host)), exponents_(std::move(exponents)) {}

  NumericalSemigroup host_;
  std::vector<Int> exponents_;
};

namespace detail {

// Strips exponents of the form s' + h with s' a smaller listed exponent and
// h a nonzero member. Input must be sorted and deduplicated.
inline std::vector<Int> strip_redundant(const NumericalSemigroup& H,
                                        const std::vector<Int>& exps) {
  std::vector<Int> out;
  for (Int s : exps) {
    bool redundant = false;
    for (Int t : exps) {
      if (t >= s) break;
      if (H.contains(s - t)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(s);
  }
  return out;
}

// Calls fn(exps) for every irredundant exponent set with 1..max_gens
// elements drawn from the members of H in [1, window_hi]. Sets are built in
// ascending order; appending a larger exponent never makes a smaller one
// redundant, so one-directional checks suffice.
template <typename Fn>
void for_each_irredundant_exponent_set(const NumericalSemigroup& H,
                                       Int max_gens, Int window_hi, Fn&& fn) {
  std::vector<Int> window;
  for (Int z = 1; z <= window_hi; ++z)
    if (H.contains(z)) window.push_back(z);

  std::vector<Int> current;
  auto extend = [&](auto&& self, std::size_t start) -> void {
    if (!current.empty()) fn(std::as_const(current));
    if (static_cast<Int>(current.size()) == max_gens) return;
    for (std::size_t i = start; i < window.size(); ++i) {
      const Int e = window[i];
      bool redundant = false;
      for (Int s : current) {
        if (H.contains(e - s)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      current.push_back(e);
      self(self, i + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
}

}  // namespace detail

inline MonomialIdeal ideal_from_exponents(const NumericalSemigroup& H,
                                          std::vector<Int> exps) {
  if (exps.empty()) throw empty_ideal();
  for (Int s : exps) {
    if (s == 0) throw zero_exponent();
    if (!H.contains(s)) throw exponent_not_in_semigroup(s);
  }
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  return MonomialIdeal(H, detail::strip_redundant(H, exps));
}

// E = S + H as a cofinite set. Its threshold never exceeds min(S) + c(H).
inline CofiniteSet support_set(const MonomialIdeal& I) {
  const NumericalSemigroup& H = I.host();
  const Int hi = I.min_exponent() + H.conductor();
  std::vector<Int> below;
  for (Int z = I.min_exponent(); z < hi; ++z) {
    for (Int s : I.exponents()) {
      if (s > z) break;
      if (H.contains(z - s)) {
        below.push_back(z);
        break;
      }
    }
  }
  return CofiniteSet::from_parts(std::move(below), hi);
}

// l(A / I) = #(H \ E), always finite.
inline Int colength(const MonomialIdeal& I) {
  const NumericalSemigroup& H = I.host();
  const CofiniteSet E = support_set(I);
  Int count = 0;
  for (Int z = 0; z < E.threshold(); ++z)
    if (H.contains(z) && !E.contains(z)) ++count;
  return count;
}

inline MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.host() != J.host())
    throw input_error("cannot multiply ideals over different semigroups");
  std::vector<Int> sums;
  sums.reserve(I.exponents().size() * J.exponents().size());
  for (Int a : I.exponents())
    for (Int b : J.exponents()) sums.push_back(a + b);
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return MonomialIdeal(I.host(), detail::strip_redundant(I.host(), sums));
}

inline MonomialIdeal power(const MonomialIdeal& I, Int n) {
  if (n < 1) throw input_error("power exponent must be >= 1");
  MonomialIdeal P = I;
  for (Int k = 1; k < n; ++k) P = multiply(P, I);
  return P;
}

// Least r >= 0 with I^{r+1} = Q I^r for Q = (t^{min S}), detected as the
// support equality E_{r+1} = min(S) + E_r. Bounded by genus(H) + 1 because
// the chain I^n / a^n inside the blowup has length at most genus(H).
inline Int reduction_number(const MonomialIdeal& I) {
  const Int m = I.min_exponent();
  const Int cap = I.host().genus() + 1;
  CofiniteSet prev = member_set(I.host());  // support of I^0
  MonomialIdeal P = I;
  for (Int r = 0; r <= cap; ++r) {
    CofiniteSet cur = support_set(P);
    if (cur == prev.shifted(m)) return r;
    prev = std::move(cur);
    P = multiply(P, I);
  }
  throw reduction_cap_exceeded(cap);
}

// Value semigroup of the blowup B = A[I/a], a = t^{min S}: generated by the
// generators of H together with the exponent differences s - min(S).
inline NumericalSemigroup blowup_semigroup(const MonomialIdeal& I) {
  std::vector<Int> gens = I.host().generators();
  for (Int s : I.exponents())
    if (s > I.min_exponent()) gens.push_back(s - I.min_exponent());
  return NumericalSemigroup::from_generators(std::move(gens));
}

// Minimal exponent set S with S + H = E, for an H-stable cofinite set E
// (e + h must stay in E for e in E, h in H). Candidates above
// threshold + multiplicity are always reducible.
inline std::vector<Int> module_generators(const CofiniteSet& E,
                                          const NumericalSemigroup& H) {
  std::vector<Int> gens;
  const Int hi = E.threshold() + H.multiplicity();
  for (Int e = 0; e < hi; ++e) {
    if (!E.contains(e)) continue;
    bool reducible = false;
    for (Int f = E.min(); f < e; ++f) {
      if (E.contains(f) && H.contains(e - f)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) gens.push_back(e);
  }
  return gens;
}

}  // namespace nsring
