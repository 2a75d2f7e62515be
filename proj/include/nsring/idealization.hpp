#pragma once

#include <algorithm>
#include <utility>

#include "nsring/coefficients.hpp"

namespace nsring {

// The idealization A = B x (B/b) of the semigroup ring B = k[[t^H]] along an
// m-primary monomial ideal b. Its torsion part H^0_m(A) = 0 x (B/b) has
// length w = l(B/b), and A / H^0_m(A) = B. The module M = B/b is carried by
// its monomial basis T = H \ support(b).
class IdealizationRing {
 public:
  const NumericalSemigroup& base() const { return base_; }
  const MonomialIdeal& defining() const { return defining_; }
  const std::vector<Int>& basis() const { return basis_; }
  Int torsion_length() const { return static_cast<Int>(basis_.size()); }

  bool in_basis(Int z) const {
    return std::binary_search(basis_.begin(), basis_.end(), z);
  }

 private:
  friend IdealizationRing make_idealization(const NumericalSemigroup&,
                                            std::vector<Int>);
  IdealizationRing(NumericalSemigroup base, MonomialIdeal defining,
                   std::vector<Int> basis)
      : base_(std::move(base)),
        defining_(std::move(defining)),
        basis_(std::move(basis)) {}

  NumericalSemigroup base_;
  MonomialIdeal defining_;
  std::vector<Int> basis_;
};

inline IdealizationRing make_idealization(const NumericalSemigroup& H,
                                          std::vector<Int> b_exps) {
  MonomialIdeal defining = ideal_from_exponents(H, std::move(b_exps));
  std::vector<Int> basis =
      difference_elements(member_set(H), support_set(defining));
  return IdealizationRing(H, std::move(defining), std::move(basis));
}

// The image of I * M inside the basis T: classes of s + x that stay in T.
inline std::vector<Int> module_action(const IdealizationRing& R,
                                      const MonomialIdeal& I) {
  std::vector<Int> out;
  for (Int x : R.basis())
    for (Int s : I.exponents())
      if (R.in_basis(s + x)) out.push_back(s + x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

struct SubmoduleIssue {
  enum Kind { ok, outside_basis, not_stable, action_escape } kind = ok;
  Int lhs = 0;  // offending element or exponent
  Int rhs = 0;  // element it was combined with
};

// First violation of the I x N ideal conditions, or kind == ok. N must be
// sorted. Checking ideal exponents against all of T covers the whole of
// I * M because N is required to be stable under the semigroup action.
inline SubmoduleIssue find_submodule_issue(const IdealizationRing& R,
                                           const std::vector<Int>& I_exps,
                                           const std::vector<Int>& N) {
  auto in_N = [&](Int z) { return std::binary_search(N.begin(), N.end(), z); };
  for (Int x : N)
    if (!R.in_basis(x)) return {SubmoduleIssue::outside_basis, x, 0};
  const Int max_basis = R.basis().empty() ? -1 : R.basis().back();
  for (Int x : N)
    for (Int h = 1; x + h <= max_basis; ++h)
      if (R.base().contains(h) && R.in_basis(x + h) && !in_N(x + h))
        return {SubmoduleIssue::not_stable, x, h};
  for (Int s : I_exps)
    for (Int x : R.basis())
      if (R.in_basis(s + x) && !in_N(s + x))
        return {SubmoduleIssue::action_escape, s, x};
  return {};
}

}  // namespace detail

// An ideal J = I x N of the idealization: I an m-primary monomial ideal of
// the base ring and N a B-submodule of M with I M <= N, both given
// combinatorially. N must be closed under the semigroup action within T and
// must absorb the ideal action.
class IdealizationIdeal {
 public:
  const IdealizationRing& ring() const { return ring_; }
  const MonomialIdeal& ideal() const { return ideal_; }
  const std::vector<Int>& submodule() const { return submodule_; }

 private:
  friend IdealizationIdeal idealization_ideal(const IdealizationRing&,
                                              std::vector<Int>,
                                              std::vector<Int>);
  IdealizationIdeal(IdealizationRing ring, MonomialIdeal ideal,
                    std::vector<Int> submodule)
      : ring_(std::move(ring)),
        ideal_(std::move(ideal)),
        submodule_(std::move(submodule)) {}

  IdealizationRing ring_;
  MonomialIdeal ideal_;
  std::vector<Int> submodule_;
};

inline IdealizationIdeal idealization_ideal(const IdealizationRing& R,
                                            std::vector<Int> I_exps,
                                            std::vector<Int> N) {
  MonomialIdeal I = ideal_from_exponents(R.base(), std::move(I_exps));

  std::sort(N.begin(), N.end());
  N.erase(std::unique(N.begin(), N.end()), N.end());

  const auto issue = detail::find_submodule_issue(R, I.exponents(), N);
  switch (issue.kind) {
    case detail::SubmoduleIssue::ok:
      break;
    case detail::SubmoduleIssue::outside_basis:
      throw input_error("submodule element " + std::to_string(issue.lhs) +
                        " is not a basis element of the torsion module");
    case detail::SubmoduleIssue::not_stable:
      throw not_h_stable(std::to_string(issue.lhs) + " + " +
                         std::to_string(issue.rhs) + " = " +
                         std::to_string(issue.lhs + issue.rhs) +
                         " lies in T but not in N");
    case detail::SubmoduleIssue::action_escape:
      throw module_action_violation(
          "t^" + std::to_string(issue.lhs) + " * t^" +
          std::to_string(issue.rhs) + " = t^" +
          std::to_string(issue.lhs + issue.rhs) + " lies in T but not in N");
  }
  return IdealizationIdeal(R, std::move(I), std::move(N));
}

struct IdealizationReport {
  std::vector<Int> table;  // l(A / J^{n+1}) for n = 0..n_max
  Int e0 = 0;
  Int e1 = 0;
};

// Hilbert data of J = I x N. Since J^{n+1} = I^{n+1} x I^n N,
//   l(A / J^{n+1}) = l(B / I^{n+1}) + w - #(I^n N),
// and the torsion term dies for n > w. The fit must reproduce e0(I) and
// e1(I) - w (the exact-sequence identity); a mismatch throws.
inline IdealizationReport idealization_report(const IdealizationIdeal& J,
                                              Int n_max) {
  const IdealizationRing& R = J.ring();
  const MonomialIdeal& I = J.ideal();
  const Int w = R.torsion_length();

  detail::PowerLadder ladder(I);
  const Int r = ladder.reduction_number();
  const Int needed = std::max(r, w + 1) + 2;
  if (n_max < needed) throw window_too_small(n_max, needed);

  const std::vector<Int>& N = J.submodule();
  std::vector<Int> table;
  table.reserve(static_cast<std::size_t>(n_max) + 1);
  for (Int n = 0; n <= n_max; ++n) {
    Int torsion_hits;
    if (n == 0) {
      torsion_hits = static_cast<Int>(N.size());
    } else {
      const CofiniteSet& E = ladder.support(n);
      torsion_hits = 0;
      for (Int y : R.basis()) {
        for (Int x : N) {
          if (x <= y && E.contains(y - x)) {
            ++torsion_hits;
            break;
          }
        }
      }
    }
    table.push_back(ladder.colength(n + 1) + w - torsion_hits);
  }

  const auto fit = detail::fit_eventually_linear(table);
  const CoefficientReport base = coefficient_report(I);
  if (fit.e0 != base.e0 || fit.e1 != base.e1 - w)
    throw formula_mismatch(
        "idealization over <" + detail::join(R.base().generators()) +
        "> with I = (" + detail::join(I.exponents()) + "), N = {" +
        detail::join(N) + "}: fitted (e0, e1) = (" + std::to_string(fit.e0) +
        ", " + std::to_string(fit.e1) + "), expected (" +
        std::to_string(base.e0) + ", " + std::to_string(base.e1 - w) + ")");
  return IdealizationReport{std::move(table), fit.e0, fit.e1};
}

inline Int default_idealization_nmax(const IdealizationIdeal& J) {
  return std::max(reduction_number(J.ideal()), J.ring().torsion_length() + 1) +
         2;
}

// (inf, sup) of the coefficient set of the idealization: (-w, genus(H) - w).
// Both bounds are recomputed from explicit witnesses: a parameter ideal with
// the minimal admissible N attains the inf, the conductor ideal with N = M
// attains the sup.
inline std::pair<Int, Int> idealization_delta_bounds(const IdealizationRing& R) {
  const NumericalSemigroup& H = R.base();
  const Int w = R.torsion_length();
  const Int genus = H.genus();

  const MonomialIdeal parameter =
      ideal_from_exponents(H, {H.multiplicity()});
  IdealizationIdeal J_inf =
      idealization_ideal(R, parameter.exponents(), module_action(R, parameter));
  const IdealizationReport inf_report =
      idealization_report(J_inf, default_idealization_nmax(J_inf));
  if (inf_report.e1 != -w)
    throw formula_mismatch("parameter witness attained e1 = " +
                           std::to_string(inf_report.e1) + ", expected " +
                           std::to_string(-w));

  std::vector<Int> conductor_exps;
  if (H.conductor() == 0) {
    conductor_exps = {1};
  } else {
    for (Int s = H.conductor(); s < H.conductor() + H.multiplicity(); ++s)
      conductor_exps.push_back(s);
  }
  IdealizationIdeal J_sup = idealization_ideal(R, conductor_exps, R.basis());
  const IdealizationReport sup_report =
      idealization_report(J_sup, default_idealization_nmax(J_sup));
  if (sup_report.e1 != genus - w)
    throw formula_mismatch("conductor witness attained e1 = " +
                           std::to_string(sup_report.e1) + ", expected " +
                           std::to_string(genus - w));

  return {-w, genus - w};
}

}  // namespace nsring
