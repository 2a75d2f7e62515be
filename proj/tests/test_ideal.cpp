#include <catch2/catch_amalgamated.hpp>

#include "nsring/monomial_ideal.hpp"
#include "oracles.hpp"

using nsring::CofiniteSet;
using nsring::Int;
using nsring::MonomialIdeal;
using nsring::NumericalSemigroup;

namespace {
const NumericalSemigroup H23 = NumericalSemigroup::from_generators({2, 3});
const NumericalSemigroup H345 = NumericalSemigroup::from_generators({3, 4, 5});
}  // namespace

TEST_CASE("exponent sets are validated and minimized") {
  const auto I = nsring::ideal_from_exponents(H345, {3, 4, 6});
  CHECK(I.exponents() == std::vector<Int>{3, 4});

  const auto m = nsring::ideal_from_exponents(H23, {2, 3});
  CHECK(m.exponents() == std::vector<Int>{2, 3});

  CHECK_THROWS_AS(nsring::ideal_from_exponents(H345, {}), nsring::empty_ideal);
  CHECK_THROWS_AS(nsring::ideal_from_exponents(H345, {1}),
                  nsring::exponent_not_in_semigroup);
  CHECK_THROWS_AS(nsring::ideal_from_exponents(H345, {3, 0}),
                  nsring::zero_exponent);
  CHECK_THROWS_AS(nsring::ideal_from_exponents(H345, {-3}),
                  nsring::exponent_not_in_semigroup);
}

TEST_CASE("support sets") {
  const auto m = nsring::ideal_from_exponents(H23, {2, 3});
  CHECK(nsring::support_set(m) == CofiniteSet::from_parts({}, 2));

  const auto I = nsring::ideal_from_exponents(H345, {3, 4});
  CHECK(nsring::support_set(I) == CofiniteSet::from_parts({3, 4}, 6));

  // (t^c) has support c + H for any host.
  for (const auto& H : nsring::enumerate_by_genus(5)) {
    if (H.is_whole()) continue;
    const auto C = nsring::ideal_from_exponents(H, {H.conductor()});
    CHECK(nsring::support_set(C) ==
          nsring::member_set(H).shifted(H.conductor()));
  }
}

TEST_CASE("colength") {
  CHECK(nsring::colength(nsring::ideal_from_exponents(H23, {2, 3})) == 1);
  CHECK(nsring::colength(nsring::ideal_from_exponents(H345, {3, 4})) == 2);
  CHECK(nsring::colength(nsring::ideal_from_exponents(H23, {2})) == 2);
}

TEST_CASE("powers") {
  const auto m = nsring::ideal_from_exponents(H23, {2, 3});
  CHECK(nsring::power(m, 2).exponents() == std::vector<Int>{4, 5});

  const auto I = nsring::ideal_from_exponents(H345, {3, 4});
  CHECK(nsring::power(I, 2).exponents() == std::vector<Int>{6, 7, 8});

  CHECK(nsring::power(I, 1) == I);
  CHECK(nsring::power(nsring::power(I, 2), 3) == nsring::power(I, 6));
  CHECK_THROWS_AS(nsring::power(I, 0), nsring::input_error);
}

TEST_CASE("power supports match the brute-force n-fold sumset") {
  for (const auto& H : nsring::enumerate_by_genus(4)) {
    std::vector<std::vector<Int>> exponent_sets;
    nsring::detail::for_each_irredundant_exponent_set(
        H, 2, H.conductor() + H.multiplicity(),
        [&](const std::vector<Int>& exps) { exponent_sets.push_back(exps); });
    for (const auto& exps : exponent_sets) {
      const auto I = nsring::ideal_from_exponents(H, exps);
      const Int max_s = I.max_exponent();
      for (Int n = 1; n <= 6; ++n) {
        const Int window = n * max_s + H.conductor() + 1;
        const auto expected = oracle::nfold_support(
            exps, H.members_below(window), n, window);
        const auto E = nsring::support_set(nsring::power(I, n));
        for (Int z = 0; z < window; ++z)
          REQUIRE(E.contains(z) == (expected.count(z) > 0));
      }
    }
  }
}

TEST_CASE("reduction numbers") {
  CHECK(nsring::reduction_number(nsring::ideal_from_exponents(H23, {2, 3})) ==
        1);
  CHECK(nsring::reduction_number(nsring::ideal_from_exponents(H345, {5})) == 0);
  // Frozen from the sumset oracle: E_2 = [6, inf) differs from 3 + E_1 at 8,
  // and E_3 = [9, inf) equals 3 + E_2.
  CHECK(nsring::reduction_number(nsring::ideal_from_exponents(H345, {3, 4})) ==
        2);
}

TEST_CASE("reduction number stays within the genus bound") {
  for (const auto& H : nsring::enumerate_by_genus(6)) {
    nsring::detail::for_each_irredundant_exponent_set(
        H, 3, H.conductor() + 2 * H.multiplicity(),
        [&](const std::vector<Int>& exps) {
          const auto I = nsring::ideal_from_exponents(H, exps);
          const Int r = nsring::reduction_number(I);
          REQUIRE(r <= H.genus() + 1);
          // Past r the support recursion is exact.
          const Int m = I.min_exponent();
          auto support_of = [&](Int n) {
            return n == 0 ? nsring::member_set(H)
                          : nsring::support_set(nsring::power(I, n));
          };
          for (Int n = r; n <= r + 2; ++n)
            REQUIRE(support_of(n + 1) == support_of(n).shifted(m));
        });
  }
}

TEST_CASE("blowup semigroups") {
  CHECK(nsring::blowup_semigroup(nsring::ideal_from_exponents(H23, {2, 3}))
            .is_whole());
  CHECK(nsring::blowup_semigroup(nsring::ideal_from_exponents(H345, {3, 4}))
            .is_whole());
  const auto principal = nsring::ideal_from_exponents(H345, {4});
  CHECK(nsring::blowup_semigroup(principal) == H345);
}

TEST_CASE("module generators invert support") {
  const auto I = nsring::ideal_from_exponents(H345, {3, 5});
  CHECK(nsring::module_generators(nsring::support_set(I), H345) ==
        I.exponents());
  // c + <2,3> pulled into <3,4,5> is the chain ideal (t^3, t^5).
  const auto E = nsring::member_set(H23).shifted(3);
  CHECK(nsring::module_generators(E, H345) == std::vector<Int>{3, 5});
}

TEST_CASE("multiply requires matching hosts") {
  CHECK_THROWS_AS(
      nsring::multiply(nsring::ideal_from_exponents(H23, {2}),
                       nsring::ideal_from_exponents(H345, {3})),
      nsring::input_error);
}
