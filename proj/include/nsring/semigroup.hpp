#pragma once

#include <algorithm>
#include <utility>

#include "nsring/core.hpp"

namespace nsring {

// A numerical semigroup H: an additively closed subset of the non-negative
// integers containing 0 whose complement (the gap set) is finite. Values are
// immutable after construction and carry their invariants precomputed.
//
// Conventions: frobenius(N) = -1 and conductor(N) = 0, so that
// conductor = frobenius + 1 holds for every semigroup.
class NumericalSemigroup {
 public:
  // Default-constructs the whole of N.
  NumericalSemigroup() : generators_{1} {}

  static NumericalSemigroup from_generators(std::vector<Int> gens);

  // Builds the semigroup whose gap set is exactly `gaps`. The complement must
  // be additively closed; throws input_error otherwise.
  static NumericalSemigroup from_gaps(std::vector<Int> gaps);

  const std::vector<Int>& generators() const { return generators_; }
  const std::vector<Int>& gaps() const { return gaps_; }
  Int genus() const { return static_cast<Int>(gaps_.size()); }
  Int frobenius() const { return conductor_ - 1; }
  Int conductor() const { return conductor_; }
  Int multiplicity() const { return multiplicity_; }
  bool is_whole() const { return conductor_ == 0; }

  bool contains(Int z) const {
    if (z < 0) return false;
    if (z >= conductor_) return true;
    return !is_gap_[static_cast<std::size_t>(z)];
  }

  // Members of H in [0, bound), ascending.
  std::vector<Int> members_below(Int bound) const {
    std::vector<Int> out;
    for (Int z = 0; z < bound; ++z)
      if (contains(z)) out.push_back(z);
    return out;
  }

  bool operator==(const NumericalSemigroup& o) const { return gaps_ == o.gaps_; }
  bool operator!=(const NumericalSemigroup& o) const { return !(*this == o); }

 private:
  struct raw_tag {};
  explicit NumericalSemigroup(raw_tag) {}
  static NumericalSemigroup build_from_gaps(std::vector<Int> gaps);

  std::vector<Int> generators_;
  std::vector<Int> gaps_;
  Int conductor_ = 0;
  Int multiplicity_ = 1;
  std::vector<bool> is_gap_;  // indexed over [0, conductor)
};

inline NumericalSemigroup NumericalSemigroup::build_from_gaps(
    std::vector<Int> gaps) {
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());

  NumericalSemigroup H{raw_tag{}};
  H.conductor_ = gaps.empty() ? 0 : gaps.back() + 1;
  H.is_gap_.assign(static_cast<std::size_t>(H.conductor_), false);
  for (Int g : gaps) H.is_gap_[static_cast<std::size_t>(g)] = true;
  H.gaps_ = std::move(gaps);

  H.multiplicity_ = 1;
  while (!H.contains(H.multiplicity_)) ++H.multiplicity_;

  // Minimal generators: nonzero members that are not a sum of two nonzero
  // members. Every member >= conductor + multiplicity is reducible, so the
  // candidate window below is exhaustive.
  const Int hi = std::max<Int>(1, H.conductor_ + H.multiplicity_ - 1);
  for (Int z = H.multiplicity_; z <= hi; ++z) {
    if (!H.contains(z)) continue;
    bool reducible = false;
    for (Int x = H.multiplicity_; x <= z - H.multiplicity_; ++x) {
      if (H.contains(x) && H.contains(z - x)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) H.generators_.push_back(z);
  }
  return H;
}

inline NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<Int> gaps) {
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  if (!gaps.empty() && gaps.front() < 1)
    throw input_error("gaps must be positive integers");

  // The complement is closed iff no gap splits as a sum of two non-gaps.
  std::vector<bool> is_gap(gaps.empty() ? 0 : gaps.back() + 1, false);
  for (Int g : gaps) is_gap[static_cast<std::size_t>(g)] = true;
  for (Int g : gaps) {
    for (Int x = 1; 2 * x <= g; ++x) {
      if (!is_gap[static_cast<std::size_t>(x)] &&
          !is_gap[static_cast<std::size_t>(g - x)])
        throw input_error("complement of the gap set is not additively closed: " +
                          std::to_string(x) + " + " + std::to_string(g - x) +
                          " = " + std::to_string(g));
    }
  }
  return build_from_gaps(std::move(gaps));
}

inline NumericalSemigroup NumericalSemigroup::from_generators(
    std::vector<Int> gens) {
  if (gens.empty()) throw empty_generators();
  for (Int g : gens)
    if (g < 1) throw non_positive_generator();
  if (detail::gcd_of(gens) != 1) throw gcd_not_one();

  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const Int m = gens.front();

  // Sieve the closure until a run of `m` consecutive members appears; from
  // the start of that run on, everything is a member.
  std::vector<bool> reach;
  Int window = std::max<Int>(64, 2 * gens.back() + 2);
  for (;;) {
    reach.assign(static_cast<std::size_t>(window), false);
    reach[0] = true;
    Int run = 0, conductor = -1;
    for (Int z = 0; z < window; ++z) {
      if (z > 0) {
        for (Int g : gens) {
          if (g > z) break;
          if (reach[static_cast<std::size_t>(z - g)]) {
            reach[static_cast<std::size_t>(z)] = true;
            break;
          }
        }
      }
      if (reach[static_cast<std::size_t>(z)]) {
        if (++run == m) {
          conductor = z - m + 1;
          break;
        }
      } else {
        run = 0;
      }
    }
    if (conductor >= 0) {
      std::vector<Int> gaps;
      for (Int z = 1; z < conductor; ++z)
        if (!reach[static_cast<std::size_t>(z)]) gaps.push_back(z);
      return build_from_gaps(std::move(gaps));
    }
    window *= 2;  // gcd 1 guarantees termination
  }
}

// Least member of H in each residue class mod n, indexed by residue.
inline std::vector<Int> apery_set(const NumericalSemigroup& H, Int n) {
  if (n <= 0 || !H.contains(n)) throw not_a_member(n);
  std::vector<Int> out(static_cast<std::size_t>(n));
  for (Int i = 0; i < n; ++i) {
    Int z = i;
    while (!H.contains(z)) z += n;
    out[static_cast<std::size_t>(i)] = z;
  }
  return out;
}

// PF(H) = { z not in H : z + h in H for every nonzero h in H }. It suffices
// to test z against the minimal generators. The Cohen-Macaulay type of the
// semigroup ring is #PF(H), and max PF(H) is the Frobenius number.
inline std::vector<Int> pseudo_frobenius(const NumericalSemigroup& H) {
  if (H.is_whole()) throw whole_semigroup();
  std::vector<Int> out;
  for (Int z : H.gaps()) {
    bool ok = true;
    for (Int g : H.generators()) {
      if (!H.contains(z + g)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(z);
  }
  return out;
}

inline Int cohen_macaulay_type(const NumericalSemigroup& H) {
  return static_cast<Int>(pseudo_frobenius(H).size());
}

// H is symmetric iff membership of z and of frobenius - z are mutually
// exclusive across 0 <= z <= frobenius (equivalently 2 * genus = conductor).
inline bool is_symmetric(const NumericalSemigroup& H) {
  const Int f = H.frobenius();
  for (Int z = 0; z <= f; ++z)
    if (H.contains(z) == H.contains(f - z)) return false;
  return true;
}

// All numerical semigroups H' with H <= H' <= N, by exhaustive filtering of
// the subsets of gaps(H). Sorted by genus descending, then by gap list.
inline std::vector<NumericalSemigroup> oversemigroups(
    const NumericalSemigroup& H, Int genus_cap = kDefaultGenusCap) {
  const Int q = H.genus();
  // 2^q subsets are walked below; 24 bounds the walk regardless of the
  // configured cap.
  const Int cap = std::min<Int>(genus_cap, 24);
  if (q > cap) throw genus_too_large(q, cap);

  const std::vector<Int>& gaps = H.gaps();
  std::vector<std::vector<Int>> gap_sets;
  const Int c = H.conductor();
  std::vector<bool> sel(static_cast<std::size_t>(std::max<Int>(c, 1)), false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q); ++mask) {
    std::fill(sel.begin(), sel.end(), false);
    std::vector<Int> subset;
    for (Int i = 0; i < q; ++i) {
      if (mask >> i & 1) {
        subset.push_back(gaps[static_cast<std::size_t>(i)]);
        sel[static_cast<std::size_t>(gaps[static_cast<std::size_t>(i)])] = true;
      }
    }
    bool closed = true;
    for (Int g : subset) {
      for (Int x = 1; closed && 2 * x <= g; ++x)
        if (!sel[static_cast<std::size_t>(x)] &&
            !sel[static_cast<std::size_t>(g - x)])
          closed = false;
      if (!closed) break;
    }
    if (closed) gap_sets.push_back(std::move(subset));
  }

  std::sort(gap_sets.begin(), gap_sets.end(),
            [](const std::vector<Int>& a, const std::vector<Int>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  std::vector<NumericalSemigroup> out;
  out.reserve(gap_sets.size());
  for (auto& gs : gap_sets)
    out.push_back(NumericalSemigroup::from_gaps(std::move(gs)));
  return out;
}

namespace detail {

// Minimal generators of S exceeding its Frobenius number, where S is given
// by its gap set. These lie in [max(conductor, 1), conductor + multiplicity].
inline std::vector<Int> generators_above_frobenius(const std::vector<Int>& gaps) {
  const Int c = gaps.empty() ? 0 : gaps.back() + 1;
  auto member = [&](Int z) {
    return z >= 0 && !std::binary_search(gaps.begin(), gaps.end(), z);
  };
  Int m = 1;
  while (!member(m)) ++m;
  std::vector<Int> out;
  for (Int a = std::max<Int>(c, 1); a <= c + m; ++a) {
    bool reducible = false;
    for (Int x = m; x <= a - m; ++x) {
      if (member(x) && member(a - x)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(a);
  }
  return out;
}

}  // namespace detail

// Every numerical semigroup of genus <= g_max, exactly once, ordered by
// genus and then by gap list. Walks the semigroup tree: each semigroup of
// genus g+1 is obtained from exactly one of genus g by removing a minimal
// generator larger than the Frobenius number.
inline std::vector<NumericalSemigroup> enumerate_by_genus(
    Int g_max, Int genus_cap = kDefaultGenusCap) {
  if (g_max < 0) throw input_error("g_max must be >= 0");
  if (g_max > genus_cap) throw genus_too_large(g_max, genus_cap);

  std::vector<std::vector<Int>> level = {{}};  // gap sets, genus 0
  std::vector<NumericalSemigroup> out;
  for (Int g = 0; g <= g_max; ++g) {
    std::sort(level.begin(), level.end());
    std::vector<std::vector<Int>> next;
    for (const auto& gaps : level) {
      out.push_back(NumericalSemigroup::from_gaps(gaps));
      if (g == g_max) continue;
      for (Int a : detail::generators_above_frobenius(gaps)) {
        std::vector<Int> child = gaps;
        child.push_back(a);  // a exceeds every existing gap
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace nsring
