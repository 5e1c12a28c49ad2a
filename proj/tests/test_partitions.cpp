#include <doctest.h>

#include <set>

#include "hilb/partitions.hpp"
#include "hilb/verification/oracles.hpp"

using hilb::Cell;
using hilb::FixedPoint;
using hilb::Partition;

TEST_CASE("partitions of small integers") {
  const auto zero = hilb::enumerate_partitions(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());
  CHECK(zero[0].size() == 0);

  const auto two = hilb::enumerate_partitions(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == Partition({2}));
  CHECK(two[1] == Partition({1, 1}));

  CHECK(hilb::enumerate_partitions(4) ==
        std::vector<Partition>{Partition({4}), Partition({3, 1}), Partition({2, 2}),
                               Partition({2, 1, 1}), Partition({1, 1, 1, 1})});
  CHECK(hilb::enumerate_partitions(7).size() == 15);
}

TEST_CASE("partition counts agree with multiplicity-vector brute force") {
  for (int m = 0; m <= 18; ++m) {
    CAPTURE(m);
    CHECK(hilb::enumerate_partitions(m).size() == hilb::oracle::partition_count(m));
  }
}

TEST_CASE("partition enumeration is reverse-lexicographic and duplicate free") {
  for (int m = 1; m <= 12; ++m) {
    const auto all = hilb::enumerate_partitions(m);
    for (std::size_t j = 0; j < all.size(); ++j) {
      CHECK(all[j].size() == m);
      if (j + 1 < all.size()) CHECK(all[j + 1] < all[j]);
    }
    CHECK(hilb::enumerate_partitions(m) == all);
  }
}

TEST_CASE("invalid part lists are rejected") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
  CHECK_THROWS_AS(hilb::enumerate_partitions(-1), std::invalid_argument);
}

TEST_CASE("cells carry arm and leg") {
  CHECK(hilb::cells(Partition({1})) == std::vector<Cell>{{0, 0, 0, 0}});

  const auto hook = hilb::cells(Partition({2, 1}));
  REQUIRE(hook.size() == 3);
  CHECK(hook[0] == Cell{0, 0, 1, 1});

  const auto p31 = hilb::cells(Partition({3, 1}));
  CHECK(p31[1] == Cell{0, 1, 1, 0});
  CHECK(hilb::cells(Partition{}).empty());
}

TEST_CASE("arm and leg agree with a direct column scan for every partition up to 10") {
  for (int m = 0; m <= 10; ++m) {
    for (const auto& p : hilb::enumerate_partitions(m)) {
      const auto cs = hilb::cells(p);
      REQUIRE(static_cast<int>(cs.size()) == p.size());
      for (const Cell& c : cs) {
        CHECK(c.arm + c.col + 1 == p.parts()[c.row]);
        int leg = 0;
        for (int r = 0; r < p.length(); ++r) {
          if (r > c.row && p.parts()[r] > c.col) ++leg;
        }
        CHECK(c.leg == leg);
      }
      CHECK(p.transpose().transpose() == p);
      CHECK(p.transpose().size() == p.size());
    }
  }
}

TEST_CASE("fixed points of Hilb^m(P^2)") {
  CHECK(hilb::enumerate_fixed_points(0).size() == 1);
  CHECK(hilb::enumerate_fixed_points(1).size() == 3);
  CHECK(hilb::enumerate_fixed_points(2).size() == 9);
  CHECK(hilb::enumerate_fixed_points(3).size() == 22);
  CHECK(hilb::enumerate_fixed_points(7).size() == 429);

  for (int m = 0; m <= 12; ++m) {
    CAPTURE(m);
    CHECK(hilb::enumerate_fixed_points(m).size() == hilb::oracle::fixed_point_count(m));
  }
}

TEST_CASE("fixed points are distinct, of the right size, and in size-triple order") {
  for (int m = 1; m <= 7; ++m) {
    const auto points = hilb::enumerate_fixed_points(m);
    std::set<std::string> seen;
    std::array<int, 3> previous{-1, -1, -1};
    for (const FixedPoint& fp : points) {
      CHECK(fp.size() == m);
      CHECK(seen.insert(hilb::to_string(fp)).second);
      const std::array<int, 3> sizes{fp.mu[0].size(), fp.mu[1].size(), fp.mu[2].size()};
      CHECK(previous <= sizes);
      previous = sizes;
    }
  }
  // Chart 2 holds the whole subscheme first.
  const auto two = hilb::enumerate_fixed_points(2);
  CHECK(hilb::to_string(two[0]) == "[() () (2)]");
  CHECK(hilb::to_string(two[1]) == "[() () (1,1)]");
  CHECK(hilb::to_string(two[2]) == "[() (1) (1)]");
}
