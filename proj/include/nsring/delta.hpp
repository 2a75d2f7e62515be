#pragma once

#include <map>
#include <set>

#include "nsring/coefficients.hpp"

namespace nsring {

// Witness for a value delta in Delta(A): an intermediate monomial ring
// A <= B' <= V with l(B'/A) = delta, together with the ideal a B' of A that
// realizes e1 = delta.
struct DeltaWitness {
  NumericalSemigroup oversemigroup;
  std::vector<Int> ideal_exponents;
};

struct DeltaReport {
  NumericalSemigroup host;
  std::vector<Int> delta;  // sorted ascending
  std::map<Int, DeltaWitness> realizations;
  Int sup = 0;
  Int inf = 0;
};

namespace detail {

// Exponents of the ideal t^a B' pulled into A, where a = max(conductor, 1).
inline std::vector<Int> contraction_ideal_exponents(
    const NumericalSemigroup& host, const NumericalSemigroup& over) {
  const Int a = std::max<Int>(host.conductor(), 1);
  const CofiniteSet E = member_set(over).shifted(a);
  return module_generators(E, host);
}

}  // namespace detail

// The set { genus(H) - genus(H') : H' an oversemigroup of H }, which is the
// full coefficient set Delta(A) of the semigroup ring. It always equals
// {0, 1, ..., genus(H)}; a hole would be a bug and throws. Witnesses pick
// the oversemigroup with the lexicographically smallest gap set per value.
inline DeltaReport delta_set(const NumericalSemigroup& H,
                             Int genus_cap = kDefaultGenusCap) {
  DeltaReport report;
  report.host = H;
  for (const NumericalSemigroup& over : oversemigroups(H, genus_cap)) {
    const Int delta = H.genus() - over.genus();
    if (report.realizations.contains(delta)) continue;
    report.realizations.emplace(
        delta,
        DeltaWitness{over, detail::contraction_ideal_exponents(H, over)});
  }
  for (const auto& [delta, witness] : report.realizations)
    report.delta.push_back(delta);

  for (Int d = 0; d <= H.genus(); ++d)
    if (!report.realizations.contains(d))
      throw delta_gap_detected("delta = " + std::to_string(d) + " over <" +
                               detail::join(H.generators()) + ">");
  report.inf = 0;
  report.sup = H.genus();
  return report;
}

struct ChainStep {
  Int index;  // 1-based position i in the chain
  NumericalSemigroup oversemigroup;
  MonomialIdeal ideal;
  Int expected_e1;  // q + 1 - i
};

// The descending chain V = B_1 > B_2 > ... > B_q > A obtained by adjoining
// the gap tails {c_i, ..., c_q}, together with the ideals I_i = t^c B_i.
// Each step drops the length by exactly one, so e1(I_i) = q + 1 - i; the
// reports are recomputed here and a mismatch throws.
inline std::vector<ChainStep> gap_chain_ideals(const NumericalSemigroup& H) {
  const Int q = H.genus();
  if (q < 1) throw input_error("gap chain requires genus >= 1");
  const std::vector<Int>& gaps = H.gaps();

  std::vector<ChainStep> steps;
  for (Int i = 1; i <= q; ++i) {
    std::vector<Int> sub_gaps(gaps.begin(), gaps.begin() + (i - 1));
    NumericalSemigroup over;
    try {
      over = NumericalSemigroup::from_gaps(sub_gaps);
    } catch (const input_error& e) {
      throw chain_closure_failure("step " + std::to_string(i) + " over <" +
                                  detail::join(H.generators()) + ">: " +
                                  e.what());
    }
    MonomialIdeal ideal = ideal_from_exponents(
        H, detail::contraction_ideal_exponents(H, over));
    const Int expected = q + 1 - i;
    const CoefficientReport report = coefficient_report(ideal);
    if (report.e1 != expected)
      throw check_error("chain ideal (" + detail::join(ideal.exponents()) +
                        ") over <" + detail::join(H.generators()) +
                        "> has e1 = " + std::to_string(report.e1) +
                        ", expected " + std::to_string(expected));
    steps.push_back(ChainStep{i, std::move(over), std::move(ideal), expected});
  }
  return steps;
}

// Every e1 value realized by an irredundant monomial ideal with at most
// max_gens exponents drawn from H intersected with [1, c + 2m]. Since an
// irredundant exponent set has pairwise distinct residues mod m, max_gens is
// clamped to the multiplicity, and at that clamp the sweep is exhaustive
// over the window.
inline std::vector<Int> monomial_delta_sweep(const NumericalSemigroup& H,
                                             Int max_gens) {
  if (H.genus() > 8) throw genus_too_large(H.genus(), 8);
  if (max_gens < 1) throw input_error("max_gens must be >= 1");
  const Int gens_cap = std::min(max_gens, H.multiplicity());

  std::set<Int> realized;
  detail::for_each_irredundant_exponent_set(
      H, gens_cap, H.conductor() + 2 * H.multiplicity(),
      [&](const std::vector<Int>& exps) {
        realized.insert(coefficient_report(ideal_from_exponents(H, exps)).e1);
      });

  for (Int e1 : realized)
    if (e1 < 0 || e1 > H.genus())
      throw check_error("sweep realized e1 = " + std::to_string(e1) +
                        " outside [0, genus] over <" +
                        detail::join(H.generators()) + ">");
  if (gens_cap >= H.multiplicity() &&
      static_cast<Int>(realized.size()) != H.genus() + 1)
    throw delta_gap_detected("exhaustive sweep over <" +
                             detail::join(H.generators()) + "> realized only " +
                             std::to_string(realized.size()) + " values");
  return std::vector<Int>(realized.begin(), realized.end());
}

struct MaxEmbdimFamily {
  NumericalSemigroup semigroup;  // <a, a+1, ..., 2a-1>
  MonomialIdeal ideal;           // (t^a, ..., t^{2a-2})
  Int expected_e1;               // type - 1 for a = 2, type for a >= 3
  Int type;
};

// The maximal embedding dimension family: H = <a, ..., 2a-1> with the ideal
// (t^a, ..., t^{2a-2}). Its e1 equals the Cohen-Macaulay type (type - 1 when
// a = 2), and Delta(A) = {0, ..., a-1}. Both facts are verified on the spot.
inline MaxEmbdimFamily max_embdim_family(Int a) {
  if (a < 2) throw input_error("family requires a >= 2");
  std::vector<Int> gens;
  for (Int g = a; g <= 2 * a - 1; ++g) gens.push_back(g);
  NumericalSemigroup H = NumericalSemigroup::from_generators(gens);

  std::vector<Int> exps;
  for (Int s = a; s <= 2 * a - 2; ++s) exps.push_back(s);
  MonomialIdeal I = ideal_from_exponents(H, exps);

  const Int type = cohen_macaulay_type(H);
  const Int expected = a == 2 ? type - 1 : type;

  const CoefficientReport report = coefficient_report(I);
  if (report.e1 != expected)
    throw check_error("max embedding dimension family a = " + std::to_string(a) +
                      ": e1 = " + std::to_string(report.e1) + ", expected " +
                      std::to_string(expected));
  const DeltaReport delta = delta_set(H);
  if (static_cast<Int>(delta.delta.size()) != a ||
      delta.delta.front() != 0 || delta.delta.back() != a - 1)
    throw check_error("max embedding dimension family a = " + std::to_string(a) +
                      ": delta set is not {0..a-1}");

  return MaxEmbdimFamily{std::move(H), std::move(I), expected, type};
}

}  // namespace nsring
