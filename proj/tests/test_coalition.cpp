#include <doctest.h>

#include "dhg/coalition.hpp"

using dhg::Coalition;

TEST_CASE("coalitions are bitmasks of 1-based players") {
  Coalition c = Coalition::of({1, 3, 5});
  CHECK(c.mask() == 0b10101);
  CHECK(c.size() == 3);
  CHECK(c.contains(1));
  CHECK(c.contains(5));
  CHECK_FALSE(c.contains(2));
  CHECK(c.players() == std::vector<dhg::PlayerId>{1, 3, 5});
  CHECK(c.lowest() == 1);
}

TEST_CASE("full and single") {
  CHECK(Coalition::full(3).mask() == 0b111);
  CHECK(Coalition::full(64).size() == 64);
  CHECK(Coalition::single(4).mask() == 0b1000);
  CHECK(Coalition().empty());
  CHECK_FALSE(Coalition::single(1).empty());
}

TEST_CASE("players outside 1..64 are rejected") {
  CHECK_THROWS_AS(Coalition::single(0), std::out_of_range);
  CHECK_THROWS_AS(Coalition::single(65), std::out_of_range);
  CHECK_THROWS_AS(Coalition::of({1, 2}).with(70), std::out_of_range);
  CHECK_THROWS_AS(Coalition::full(65), std::out_of_range);
}

TEST_CASE("set algebra") {
  Coalition a = Coalition::of({1, 2, 3});
  Coalition b = Coalition::of({2, 3, 4});
  CHECK((a | b) == Coalition::of({1, 2, 3, 4}));
  CHECK((a & b) == Coalition::of({2, 3}));
  CHECK((a - b) == Coalition::of({1}));
  CHECK(a.with(4) == Coalition::of({1, 2, 3, 4}));
  CHECK(a.without(1) == Coalition::of({2, 3}));
  CHECK(a.without(4) == a);
  CHECK(Coalition::of({2, 3}).subset_of(a));
  CHECK_FALSE(b.subset_of(a));
  CHECK(a.intersects(b));
  CHECK_FALSE(Coalition::of({1}).intersects(Coalition::of({4})));
}

TEST_CASE("ordering is mask order") {
  CHECK(Coalition::of({1}) < Coalition::of({2}));
  CHECK(Coalition::of({2}) < Coalition::of({1, 2}));
}
