#include <catch2/catch_amalgamated.hpp>

#include "nsring/cofinite_set.hpp"

using nsring::CofiniteSet;
using nsring::Int;

TEST_CASE("canonical form shrinks the threshold maximally") {
  const auto s = CofiniteSet::from_parts({2, 3, 5, 6}, 7);
  CHECK(s.threshold() == 5);
  CHECK(s.below() == std::vector<Int>{2, 3});

  const auto whole = CofiniteSet::from_parts({0, 1, 2}, 3);
  CHECK(whole.threshold() == 0);
  CHECK(whole.below().empty());
  CHECK(whole == CofiniteSet{});
}

TEST_CASE("membership and minimum") {
  const auto s = CofiniteSet::from_parts({3, 4}, 6);
  CHECK_FALSE(s.contains(-1));
  CHECK_FALSE(s.contains(0));
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(5));
  CHECK(s.contains(6));
  CHECK(s.contains(1000));
  CHECK(s.min() == 3);
  CHECK(CofiniteSet{}.min() == 0);
}

TEST_CASE("structural equality is set equality") {
  const auto a = CofiniteSet::from_parts({3, 4, 6, 7, 8}, 9);
  const auto b = CofiniteSet::from_parts({3, 4}, 6);
  CHECK(a == b);
  CHECK(a != CofiniteSet::from_parts({3}, 6));
}

TEST_CASE("shift") {
  const auto s = CofiniteSet::from_parts({3, 4}, 6);
  const auto t = s.shifted(2);
  CHECK(t.below() == std::vector<Int>{5, 6});
  CHECK(t.threshold() == 8);
  CHECK(t.shifted(-2) == s);
  CHECK_THROWS_AS(s.shifted(-4), nsring::input_error);
}

TEST_CASE("from_parts validates") {
  CHECK_THROWS_AS(CofiniteSet::from_parts({-1}, 3), nsring::input_error);
  CHECK_THROWS_AS(CofiniteSet::from_parts({5}, 3), nsring::input_error);
  CHECK_THROWS_AS(CofiniteSet::from_parts({}, -1), nsring::input_error);
}

TEST_CASE("difference elements") {
  const auto a = CofiniteSet::from_parts({2, 3}, 6);
  const auto b = CofiniteSet::from_parts({3}, 8);
  CHECK(nsring::difference_elements(a, b) == std::vector<Int>{2, 6, 7});
  CHECK(nsring::difference_size(b, a) == 0);
  CHECK(nsring::difference_size(a, a) == 0);
}

TEST_CASE("member set of a semigroup") {
  const auto H = nsring::NumericalSemigroup::from_generators({3, 4, 5});
  const auto m = nsring::member_set(H);
  CHECK(m.below() == std::vector<Int>{0});
  CHECK(m.threshold() == 3);
  const auto whole = nsring::member_set(nsring::NumericalSemigroup{});
  CHECK(whole == CofiniteSet{});
}
