#pragma once

#include <functional>
#include <random>
#include <set>
#include <string>

#include "nsring/delta.hpp"
#include "nsring/idealization.hpp"
#include "nsring/pair_ideal.hpp"

namespace nsring {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string details;
};

struct VerifyOptions {
  Int max_genus = 6;   // hosts swept: every semigroup of genus <= max_genus
  Int max_gens = 3;    // exponent count cap for the agreement sweep
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;  // power-invariance sampling
  Int genus_cap = kDefaultGenusCap;
};

namespace detail {

inline void run_check(std::vector<CheckResult>& out, const std::string& name,
                      const std::function<std::string()>& body) {
  CheckResult result;
  result.name = name;
  try {
    result.details = body();
    result.passed = true;
  } catch (const error& e) {
    result.passed = false;
    result.details = e.what();
  }
  out.push_back(std::move(result));
}

inline void require(bool condition, const std::string& message) {
  if (!condition) throw check_error(message);
}

}  // namespace detail

// The full cross-validation suite. Every check recomputes its quantities by
// at least two independent routes; a failure indicates a bug, never data.
// All iteration is deterministic, so the output is byte-stable for fixed
// options.
inline std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  using detail::require;
  std::vector<CheckResult> results;

  const std::vector<NumericalSemigroup> hosts =
      enumerate_by_genus(opt.max_genus, opt.genus_cap);

  detail::run_check(results, "semigroup_invariants", [&] {
    for (const NumericalSemigroup& H : hosts) {
      require(H.conductor() == H.frobenius() + 1, "conductor != frobenius + 1");
      require(H.genus() == static_cast<Int>(H.gaps().size()),
              "genus != number of gaps");
      require(H.contains(0) && H.contains(H.conductor()),
              "membership at 0 or at the conductor failed");
      for (Int g : H.gaps()) require(!H.contains(g), "gap reported as member");
      require(is_symmetric(H) == (2 * H.genus() == H.conductor()),
              "symmetry disagrees with 2 genus = conductor");
      const auto apery = apery_set(H, H.multiplicity());
      require(static_cast<Int>(apery.size()) == H.multiplicity(),
              "apery set size != multiplicity");
      for (std::size_t i = 0; i < apery.size(); ++i) {
        require(apery[i] % H.multiplicity() == static_cast<Int>(i),
                "apery element in wrong residue class");
        require(H.contains(apery[i]) && !H.contains(apery[i] - H.multiplicity()),
                "apery element not minimal in its class");
      }
      if (!H.is_whole()) {
        const auto pf = pseudo_frobenius(H);
        require(!pf.empty() && pf.back() == H.frobenius(),
                "max pseudo-Frobenius number != frobenius");
        if (H.multiplicity() >= 2) {
          const Int type = static_cast<Int>(pf.size());
          require(1 <= type && type <= H.multiplicity() - 1,
                  "type outside [1, multiplicity - 1]");
        }
      }
    }
    return std::to_string(hosts.size()) + " semigroups of genus <= " +
           std::to_string(opt.max_genus) + " pass all structural invariants";
  });

  detail::run_check(results, "oversemigroup_properties", [&] {
    Int total = 0;
    for (const NumericalSemigroup& H : hosts) {
      const auto overs = oversemigroups(H, opt.genus_cap);
      total += static_cast<Int>(overs.size());
      bool seen_self = false, seen_whole = false;
      for (const NumericalSemigroup& O : overs) {
        if (O == H) seen_self = true;
        if (O.is_whole()) seen_whole = true;
        for (Int g : O.gaps())
          require(!H.contains(g), "oversemigroup gap is a member of H");
      }
      require(seen_self && seen_whole,
              "oversemigroups must include H itself and N");
    }
    return std::to_string(total) + " oversemigroups across " +
           std::to_string(hosts.size()) + " hosts";
  });

  detail::run_check(results, "power_support_monotonicity", [&] {
    Int ideals = 0;
    for (const NumericalSemigroup& H : hosts) {
      detail::for_each_irredundant_exponent_set(
          H, std::min<Int>(opt.max_gens, 2),
          H.conductor() + H.multiplicity(), [&](const std::vector<Int>& exps) {
            ++ideals;
            const MonomialIdeal I = ideal_from_exponents(H, exps);
            const Int m = I.min_exponent();
            detail::PowerLadder ladder(I);
            const Int r = ladder.reduction_number();
            for (Int n = 0; n <= r + 2; ++n) {
              const CofiniteSet& next = ladder.support(n + 1);
              const CofiniteSet& cur = ladder.support(n);
              for (Int z : difference_elements(next, cur))
                require(false, "support of I^{n+1} escapes the one of I^n at " +
                                   std::to_string(z));
              for (Int z : difference_elements(cur.shifted(m), next))
                require(false,
                        "m + support(I^n) escapes support of I^{n+1} at " +
                            std::to_string(z));
              if (n >= r)
                require(next == cur.shifted(m),
                        "support recursion must be exact past the reduction "
                        "number");
            }
            // Blowup stabilization: B = I^r / a^r as a value set.
            require(member_set(blowup_semigroup(I)) ==
                        ladder.support(r).shifted(-r * m),
                    "blowup member set != support(I^r) - r m");
          });
    }
    return std::to_string(ideals) +
           " ideals: supports nest, shift past r, and match the blowup";
  });

  detail::run_check(results, "three_method_agreement", [&] {
    Int ideals = 0;
    for (const NumericalSemigroup& H : hosts) {
      detail::for_each_irredundant_exponent_set(
          H, opt.max_gens, H.conductor() + 2 * H.multiplicity(),
          [&](const std::vector<Int>& exps) {
            ++ideals;
            const CoefficientReport report =
                coefficient_report(ideal_from_exponents(H, exps));
            require(0 <= report.e1 && report.e1 <= H.genus(),
                    "e1 outside [0, genus]");
          });
      // The conductor ideal attains e1 = genus.
      std::vector<Int> cond;
      for (Int s = std::max<Int>(H.conductor(), 1);
           s < std::max<Int>(H.conductor(), 1) + H.multiplicity(); ++s)
        cond.push_back(s);
      require(coefficient_report(ideal_from_exponents(H, cond)).e1 == H.genus(),
              "conductor ideal misses e1 = genus");
    }
    return std::to_string(ideals) + " ideals with <= " +
           std::to_string(opt.max_gens) +
           " generators: fit, sandwich and blowup e1 agree, e0 fit matches "
           "the parameter colength, and 0 <= e1 <= genus";
  });

  detail::run_check(results, "delta_interval_and_sweep", [&] {
    Int swept = 0;
    for (const NumericalSemigroup& H : hosts) {
      if (H.genus() > 8) continue;
      const DeltaReport report = delta_set(H, opt.genus_cap);
      require(static_cast<Int>(report.delta.size()) == H.genus() + 1,
              "delta set is not the full interval");
      require(report.sup == H.genus() && report.inf == 0,
              "delta bounds are off");
      const std::vector<Int> sweep =
          monomial_delta_sweep(H, H.multiplicity());
      require(sweep == report.delta,
              "exhaustive monomial sweep disagrees with the oversemigroup "
              "route");
      ++swept;
    }
    return std::to_string(swept) +
           " hosts: delta = {0..genus} via oversemigroups and via the "
           "exhaustive monomial sweep";
  });

  detail::run_check(results, "gap_chain", [&] {
    Int steps = 0;
    for (const NumericalSemigroup& H : hosts) {
      if (H.genus() < 1) continue;
      const auto chain = gap_chain_ideals(H);
      require(static_cast<Int>(chain.size()) == H.genus(),
              "chain length != genus");
      for (const ChainStep& step : chain) {
        require(coefficient_report(step.ideal).e1 == step.expected_e1,
                "recomputed chain e1 mismatch");
        ++steps;
      }
    }
    return std::to_string(steps) + " chain ideals realize e1 = q + 1 - i";
  });

  detail::run_check(results, "symmetric_sup", [&] {
    Int symmetric = 0;
    for (const NumericalSemigroup& H : hosts) {
      if (!is_symmetric(H)) continue;
      ++symmetric;
      const DeltaReport report = delta_set(H, opt.genus_cap);
      require(report.delta.back() == H.conductor() / 2,
              "max delta != conductor / 2 for symmetric H");
    }
    return std::to_string(symmetric) +
           " symmetric hosts: max delta = conductor / 2";
  });

  detail::run_check(results, "max_embdim_family", [&] {
    for (Int a = 2; a <= 7; ++a) max_embdim_family(a);
    return "a = 2..7: e1 of (t^a..t^{2a-2}) matches the Cohen-Macaulay type "
           "rule and delta = {0..a-1}";
  });

  detail::run_check(results, "power_invariance", [&] {
    std::mt19937_64 rng(opt.seed);
    const std::vector<NumericalSemigroup> universe = enumerate_by_genus(5);
    Int checked = 0;
    for (Int trial = 0; trial < 20; ++trial) {
      const NumericalSemigroup& H =
          universe[static_cast<std::size_t>(rng() % universe.size())];
      std::vector<Int> window;
      for (Int z = 1; z <= H.conductor() + 2 * H.multiplicity(); ++z)
        if (H.contains(z)) window.push_back(z);
      const Int want = 1 + static_cast<Int>(rng() % 3);
      std::vector<Int> exps;
      for (Int attempts = 0;
           static_cast<Int>(exps.size()) < want && attempts < 32; ++attempts) {
        const Int e = window[static_cast<std::size_t>(rng() % window.size())];
        bool dependent = false;
        for (Int s : exps)
          if (H.contains(e - s) || H.contains(s - e) || s == e)
            dependent = true;
        if (!dependent) exps.push_back(e);
      }
      const MonomialIdeal I = ideal_from_exponents(H, exps);
      const CoefficientReport base = coefficient_report(I);
      for (Int k = 1; k <= 5; ++k) {
        const CoefficientReport powered = coefficient_report(power(I, k));
        const auto predicted =
            predict_power_coefficients(base.e0, base.e1, 1, k);
        require(powered.e0 == k * base.e0 && powered.e0 == predicted.first,
                "e0(I^k) != k e0(I)");
        require(powered.e1 == base.e1 && powered.e1 == predicted.second,
                "e1(I^k) != e1(I)");
        ++checked;
      }
    }
    return "20 seeded ideals, k = 1..5: recomputed (e0, e1) of I^k equals "
           "(k e0, e1) and the closed formula (" +
           std::to_string(checked) + " power checks)";
  });

  detail::run_check(results, "idealization_theorem", [&] {
    Int rings = 0, pairs = 0;
    for (const NumericalSemigroup& H : hosts) {
      if (H.genus() > 6) continue;
      std::vector<std::vector<Int>> defining_candidates;
      detail::for_each_irredundant_exponent_set(
          H, 2, H.conductor() + 2 * H.multiplicity(),
          [&](const std::vector<Int>& exps) {
            if (colength(ideal_from_exponents(H, exps)) <= 4)
              defining_candidates.push_back(exps);
          });
      for (const auto& b_exps : defining_candidates) {
        const IdealizationRing R = make_idealization(H, b_exps);
        const Int w = R.torsion_length();
        const auto bounds = idealization_delta_bounds(R);
        require(bounds.first == -w && bounds.second == H.genus() - w,
                "idealization bounds are off");
        ++rings;

        detail::for_each_irredundant_exponent_set(
            H, 2, H.conductor() + H.multiplicity(),
            [&](const std::vector<Int>& I_exps) {
              const MonomialIdeal I = ideal_from_exponents(H, I_exps);
              const CoefficientReport base = coefficient_report(I);
              // All submodules N of M with I M <= N and N stable under H.
              const auto& T = R.basis();
              for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w);
                   ++mask) {
                std::vector<Int> N;
                for (Int i = 0; i < w; ++i)
                  if (mask >> i & 1)
                    N.push_back(T[static_cast<std::size_t>(i)]);
                if (detail::find_submodule_issue(R, I.exponents(), N).kind !=
                    detail::SubmoduleIssue::ok)
                  continue;
                const IdealizationIdeal J =
                    idealization_ideal(R, I.exponents(), N);
                const IdealizationReport report = idealization_report(
                    J, default_idealization_nmax(J));
                require(report.e0 == base.e0 && report.e1 == base.e1 - w,
                        "idealization fit disagrees with e1(I) - w");
                ++pairs;
              }
            });
      }
    }
    return std::to_string(rings) + " idealization rings (w <= 4), " +
           std::to_string(pairs) +
           " valid (I, N) pairs: fitted e1 = e1(I) - w, e0 unchanged, and "
           "the (-w, genus - w) bounds are attained by witnesses";
  });

  detail::run_check(results, "pair_ideal_family", [&] {
    Int checked = 0;
    for (Int a = 1; a <= 10; ++a) {
      for (Int b = 0; b <= a; ++b) {
        const PairIdeal P(a, b);
        for (Int k = 1; k <= 5; ++k)
          require(pair_power(P, k) == pair_power_closed_form(P, k),
                  "pair power != closed form");
        const PairIdealReport report = pair_ideal_report(P, 4);
        require(report.e0 == 2 * a && report.e1 == a - b,
                "pair ideal fit is off");
        ++checked;
      }
    }
    for (Int n = 0; n <= 10; ++n)
      require(pair_ideal_report(PairIdeal(n + 1, 1), 4).e1 == n,
              "pair (n+1, 1) misses e1 = n");
    return std::to_string(checked) +
           " pair ideals: repeated product matches the closed form and "
           "e1 = a - b; (n+1, 1) realizes every n in [0, 10]";
  });

  return results;
}

}  // namespace nsring
