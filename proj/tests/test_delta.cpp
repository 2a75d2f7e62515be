#include <catch2/catch_amalgamated.hpp>

#include "nsring/delta.hpp"

using nsring::Int;
using nsring::NumericalSemigroup;

namespace {
const NumericalSemigroup H23 = NumericalSemigroup::from_generators({2, 3});
const NumericalSemigroup H345 = NumericalSemigroup::from_generators({3, 4, 5});
}  // namespace

TEST_CASE("delta sets are full intervals") {
  const auto d23 = nsring::delta_set(H23);
  CHECK(d23.delta == std::vector<Int>{0, 1});
  CHECK(d23.sup == 1);
  CHECK(d23.inf == 0);

  const auto d345 = nsring::delta_set(H345);
  CHECK(d345.delta == std::vector<Int>{0, 1, 2});

  const auto whole = nsring::delta_set(NumericalSemigroup{});
  CHECK(whole.delta == std::vector<Int>{0});
}

TEST_CASE("delta witnesses realize their value") {
  for (const auto& H : nsring::enumerate_by_genus(5)) {
    const auto report = nsring::delta_set(H);
    for (const auto& [delta, witness] : report.realizations) {
      CHECK(H.genus() - witness.oversemigroup.genus() == delta);
      const auto I = nsring::ideal_from_exponents(H, witness.ideal_exponents);
      CHECK(nsring::coefficient_report(I).e1 == delta);
    }
  }
}

TEST_CASE("gap chains descend by one") {
  const auto chain345 = nsring::gap_chain_ideals(H345);
  REQUIRE(chain345.size() == 2);
  CHECK(chain345[0].oversemigroup.is_whole());
  CHECK(chain345[0].ideal.exponents() == std::vector<Int>{3, 4, 5});
  CHECK(chain345[0].expected_e1 == 2);
  CHECK(chain345[1].oversemigroup == H23);
  CHECK(chain345[1].ideal.exponents() == std::vector<Int>{3, 5});
  CHECK(chain345[1].expected_e1 == 1);

  const auto chain23 = nsring::gap_chain_ideals(H23);
  REQUIRE(chain23.size() == 1);
  CHECK(chain23[0].ideal.exponents() == std::vector<Int>{2, 3});
  CHECK(chain23[0].expected_e1 == 1);

  CHECK_THROWS_AS(nsring::gap_chain_ideals(NumericalSemigroup{}),
                  nsring::input_error);
}

TEST_CASE("monomial sweeps recover the interval") {
  CHECK(nsring::monomial_delta_sweep(H23, 2) == std::vector<Int>{0, 1});
  CHECK(nsring::monomial_delta_sweep(H345, 3) == std::vector<Int>{0, 1, 2});
  CHECK(nsring::monomial_delta_sweep(NumericalSemigroup{}, 1) ==
        std::vector<Int>{0});
  CHECK_THROWS_AS(nsring::monomial_delta_sweep(H23, 0), nsring::input_error);
}

TEST_CASE("sweep equals the oversemigroup route on small hosts") {
  for (const auto& H : nsring::enumerate_by_genus(4)) {
    const auto sweep = nsring::monomial_delta_sweep(H, H.multiplicity());
    CHECK(sweep == nsring::delta_set(H).delta);
  }
}

TEST_CASE("symmetric hosts top out at conductor / 2") {
  for (const auto& H : nsring::enumerate_by_genus(6)) {
    if (!nsring::is_symmetric(H)) continue;
    CHECK(nsring::delta_set(H).delta.back() == H.conductor() / 2);
  }
}

TEST_CASE("maximal embedding dimension family") {
  const auto f2 = nsring::max_embdim_family(2);
  CHECK(f2.semigroup == H23);
  CHECK(f2.ideal.exponents() == std::vector<Int>{2});
  CHECK(f2.type == 1);
  CHECK(f2.expected_e1 == 0);

  const auto f3 = nsring::max_embdim_family(3);
  CHECK(f3.semigroup == H345);
  CHECK(f3.ideal.exponents() == std::vector<Int>{3, 4});
  CHECK(f3.type == 2);
  CHECK(f3.expected_e1 == 2);

  const auto f5 = nsring::max_embdim_family(5);
  CHECK(f5.type == 4);
  CHECK(f5.expected_e1 == 4);

  CHECK_THROWS_AS(nsring::max_embdim_family(1), nsring::input_error);
}
