#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsring {

// All quantities in this library are exact integers. Enumeration caps keep
// every intermediate well inside the 64-bit range.
using Int = std::int64_t;

// Default cap on the genus of semigroups fed to the exhaustive enumerators.
inline constexpr Int kDefaultGenusCap = 16;

// Root of the library's exception hierarchy.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid caller input (bad generators, exponents outside the semigroup,
// windows too small, ...). The CLI maps these to exit code 1.
struct input_error : error {
  using error::error;
};

// A mathematical cross-check failed. Every one of these signals an
// implementation bug, never an expected outcome. The CLI maps them to
// exit code 2.
struct check_error : error {
  using error::error;
};

struct empty_generators : input_error {
  empty_generators() : input_error("generator list is empty") {}
};
struct non_positive_generator : input_error {
  non_positive_generator() : input_error("generators must be >= 1") {}
};
struct gcd_not_one : input_error {
  gcd_not_one() : input_error("gcd of the generators must be 1") {}
};
struct not_a_member : input_error {
  explicit not_a_member(Int z)
      : input_error(std::to_string(z) + " is not a member of the semigroup") {}
};
struct whole_semigroup : input_error {
  whole_semigroup()
      : input_error("the whole semigroup N has no pseudo-Frobenius numbers") {}
};
struct genus_too_large : input_error {
  genus_too_large(Int genus, Int cap)
      : input_error("genus " + std::to_string(genus) +
                    " exceeds the enumeration cap " + std::to_string(cap)) {}
};
struct empty_ideal : input_error {
  empty_ideal() : input_error("exponent list is empty") {}
};
struct zero_exponent : input_error {
  zero_exponent() : input_error("exponent 0 would give the unit ideal") {}
};
struct exponent_not_in_semigroup : input_error {
  explicit exponent_not_in_semigroup(Int z)
      : input_error("exponent " + std::to_string(z) +
                    " is not a member of the host semigroup") {}
};
struct window_too_small : input_error {
  window_too_small(Int n_max, Int needed)
      : input_error("n_max = " + std::to_string(n_max) +
                    " is too small, need at least " + std::to_string(needed)) {}
};
struct not_yet_linear : input_error {
  not_yet_linear()
      : input_error("table has fewer than 3 points on its linear tail") {}
};
struct not_h_stable : input_error {
  explicit not_h_stable(const std::string& detail)
      : input_error("submodule is not stable under the semigroup action: " +
                    detail) {}
};
struct module_action_violation : input_error {
  explicit module_action_violation(const std::string& detail)
      : input_error("I*M is not contained in the submodule: " + detail) {}
};
struct invalid_pair : input_error {
  invalid_pair(Int a, Int b)
      : input_error("(" + std::to_string(a) + ", " + std::to_string(b) +
                    ") is not a valid pair ideal, need 1 <= a and 0 <= b <= a") {
  }
};

struct reduction_cap_exceeded : check_error {
  reduction_cap_exceeded(Int cap)
      : check_error("no reduction number found below " + std::to_string(cap) +
                    "; this should be impossible") {}
};
struct method_disagreement : check_error {
  explicit method_disagreement(const std::string& detail)
      : check_error("coefficient methods disagree: " + detail) {}
};
struct non_integral_result : check_error {
  non_integral_result()
      : check_error("power coefficient formula produced a non-integer") {}
};
struct delta_gap_detected : check_error {
  explicit delta_gap_detected(const std::string& detail)
      : check_error("realized e1 set has a hole: " + detail) {}
};
struct chain_closure_failure : check_error {
  explicit chain_closure_failure(const std::string& detail)
      : check_error("gap chain member is not additively closed: " + detail) {}
};
struct formula_mismatch : check_error {
  explicit formula_mismatch(const std::string& detail)
      : check_error("fitted coefficients contradict the predicted ones: " +
                    detail) {}
};

namespace detail {

inline Int gcd_of(const std::vector<Int>& xs) {
  Int g = 0;
  for (Int x : xs) g = std::gcd(g, x);
  return g;
}

inline std::string join(const std::vector<Int>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace detail

}  // namespace nsring
