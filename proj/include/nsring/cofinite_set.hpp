#pragma once

#include <algorithm>

#include "nsring/core.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

// A cofinite subset of the non-negative integers: an explicit finite part
// plus the full ray [threshold, infinity). Canonical form keeps the
// threshold minimal (threshold = 0 or threshold - 1 is not in the finite
// part), so structural equality is set equality.
class CofiniteSet {
 public:
  // The whole of N.
  CofiniteSet() = default;

  static CofiniteSet from_parts(std::vector<Int> below, Int threshold) {
    if (threshold < 0) throw input_error("threshold must be >= 0");
    std::sort(below.begin(), below.end());
    below.erase(std::unique(below.begin(), below.end()), below.end());
    if (!below.empty() && below.front() < 0)
      throw input_error("cofinite set elements must be >= 0");
    if (!below.empty() && below.back() >= threshold)
      throw input_error("finite part must lie below the threshold");
    CofiniteSet s;
    s.below_ = std::move(below);
    s.threshold_ = threshold;
    s.canonicalize();
    return s;
  }

  Int threshold() const { return threshold_; }
  const std::vector<Int>& below() const { return below_; }

  bool contains(Int z) const {
    if (z < 0) return false;
    if (z >= threshold_) return true;
    return std::binary_search(below_.begin(), below_.end(), z);
  }

  Int min() const { return below_.empty() ? threshold_ : below_.front(); }

  // { t + x : x in this set }. Requires t + min() >= 0.
  CofiniteSet shifted(Int t) const {
    if (min() + t < 0 || threshold_ + t < 0)
      throw input_error("shift would produce negative elements");
    CofiniteSet s;
    s.threshold_ = threshold_ + t;
    s.below_.reserve(below_.size());
    for (Int x : below_) s.below_.push_back(x + t);
    return s;  // shifting preserves canonical form
  }

  bool operator==(const CofiniteSet& o) const = default;

 private:
  void canonicalize() {
    while (threshold_ > 0 && !below_.empty() && below_.back() == threshold_ - 1) {
      below_.pop_back();
      --threshold_;
    }
  }

  std::vector<Int> below_;
  Int threshold_ = 0;
};

// The member set of H as a cofinite set.
inline CofiniteSet member_set(const NumericalSemigroup& H) {
  return CofiniteSet::from_parts(H.members_below(H.conductor()), H.conductor());
}

// Elements of a \ b, ascending. Finite for any two cofinite sets.
inline std::vector<Int> difference_elements(const CofiniteSet& a,
                                            const CofiniteSet& b) {
  std::vector<Int> out;
  const Int hi = std::max(a.threshold(), b.threshold());
  for (Int z = 0; z < hi; ++z)
    if (a.contains(z) && !b.contains(z)) out.push_back(z);
  return out;
}

inline Int difference_size(const CofiniteSet& a, const CofiniteSet& b) {
  return static_cast<Int>(difference_elements(a, b).size());
}

}  // namespace nsring
