#include <doctest.h>

#include <algorithm>

#include "hilb/equivariant_geometry.hpp"
#include "hilb/errors.hpp"

using hilb::FixedPoint;
using hilb::Partition;
using hilb::Specialization;
using hilb::WeightForm;
using hilb::kW1;
using hilb::kW2;

namespace {

FixedPoint at_chart(int chart, std::vector<int> parts) {
  FixedPoint fp;
  fp.mu[chart] = Partition(std::move(parts));
  return fp;
}

bool same_multiset(std::vector<WeightForm> a, std::vector<WeightForm> b) {
  auto key = [](const WeightForm& x, const WeightForm& y) {
    return std::pair(x.a, x.b) < std::pair(y.a, y.b);
  };
  std::sort(a.begin(), a.end(), key);
  std::sort(b.begin(), b.end(), key);
  return a == b;
}

}  // namespace

TEST_CASE("chart frames follow the torus convention") {
  const auto c0 = hilb::chart_frame(0);
  const auto c1 = hilb::chart_frame(1);
  const auto c2 = hilb::chart_frame(2);
  CHECK(c0.coord_weights == std::array{kW1, kW2});
  CHECK(c1.coord_weights == std::array{-kW1, kW2 - kW1});
  CHECK(c2.coord_weights == std::array{-kW2, kW1 - kW2});
  CHECK(c0.line_weight == WeightForm{});
  CHECK(c1.line_weight == kW1);
  CHECK(c2.line_weight == kW2);
  CHECK_THROWS_AS(hilb::chart_frame(3), std::out_of_range);
}

TEST_CASE("line weights satisfy the cocycle condition") {
  // lw(b) - lw(a) is the character of x_b / x_a, a coordinate of chart a;
  // its negative is a coordinate of chart b.
  for (const WeightForm shift : {WeightForm{}, WeightForm{4, -9}}) {
    const hilb::Linearization lin{shift};
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        const auto fa = hilb::chart_frame(a, lin);
        const auto fb = hilb::chart_frame(b, lin);
        const WeightForm transition = fb.line_weight - fa.line_weight;
        CHECK(std::ranges::count(fa.coord_weights, transition) == 1);
        CHECK(std::ranges::count(fb.coord_weights, -transition) == 1);
      }
    }
  }
}

TEST_CASE("tangent weights") {
  CHECK(same_multiset(hilb::tangent_weights(at_chart(0, {1})), {kW1, kW2}));

  // Cells (0,0): arm 1, leg 0 -> 2 w1, w2 - w1.  Cell (0,1): arm 0 -> w1, w2.
  const auto two = hilb::tangent_weights(at_chart(0, {2}));
  CHECK(same_multiset(two, {2 * kW1, kW2 - kW1, kW1, kW2}));
  const Specialization generic{3, 17, 0};
  for (const auto& w : two) CHECK(hilb::evaluate(w, generic) != 0);

  for (int m = 0; m <= 6; ++m) {
    for (const auto& fp : hilb::enumerate_fixed_points(m)) {
      CHECK(hilb::tangent_weights(fp).size() == static_cast<std::size_t>(2 * m));
      CHECK(hilb::e_weights(fp).size() == static_cast<std::size_t>(m));
    }
  }
}

TEST_CASE("weights of H^0(O_Z(twist))") {
  CHECK(hilb::oz_weights(at_chart(0, {1}), 0) == std::vector{WeightForm{}});
  CHECK(hilb::oz_weights(at_chart(0, {1}), -1) ==
        std::vector{-hilb::chart_frame(0).line_weight});
  CHECK(hilb::oz_weights(at_chart(1, {1}), -1) == std::vector{-kW1});
  // Monomials 1, x, y at chart 0 for the partition (2,1).
  CHECK(same_multiset(hilb::oz_weights(at_chart(0, {2, 1}), 0), {WeightForm{}, kW1, kW2}));
  for (const auto& fp : hilb::enumerate_fixed_points(5)) {
    CHECK(hilb::oz_weights(fp, 3).size() == 5u);
  }
}

TEST_CASE("fiber of E") {
  CHECK(hilb::e_weights(at_chart(0, {1})).size() == 1u);
  FixedPoint fp;
  fp.mu[1] = Partition({1});
  fp.mu[2] = Partition({1});
  const auto e = hilb::e_weights(fp);
  REQUIRE(e.size() == 2u);
  // Two reduced points: -lw(1) and -lw(2), differing by lw(2) - lw(1).
  CHECK(same_multiset(e, {-kW1, -kW2}));
  CHECK(e[0] - e[1] == kW2 - kW1);
}

TEST_CASE("lambda depends only on chart sizes") {
  CHECK(hilb::lambda_weight(at_chart(0, {1})) == hilb::chart_frame(0).line_weight);
  CHECK(hilb::lambda_weight(at_chart(1, {1})) == kW1);

  for (int m = 0; m <= 6; ++m) {
    for (const auto& fp : hilb::enumerate_fixed_points(m)) {
      WeightForm expected;
      for (int c = 0; c < 3; ++c) expected += fp.mu[c].size() * hilb::chart_frame(c).line_weight;
      CHECK(hilb::lambda_weight(fp) == expected);

      const Specialization s{7, -11, 0};
      const Specialization flipped{-7, 11, 0};
      CHECK(hilb::evaluate(hilb::lambda_weight(fp), flipped) ==
            -hilb::evaluate(hilb::lambda_weight(fp), s));
    }
  }
}

TEST_CASE("changing the linearization shifts E by -chi and lambda by m chi") {
  const WeightForm chi{5, -3};
  const hilb::Linearization shifted{chi};
  for (const auto& fp : hilb::enumerate_fixed_points(4)) {
    const auto base = hilb::fixed_point_weights(fp);
    const auto moved = hilb::fixed_point_weights(fp, shifted);
    REQUIRE(base.e_weights.size() == moved.e_weights.size());
    for (std::size_t j = 0; j < base.e_weights.size(); ++j) {
      CHECK(moved.e_weights[j] == base.e_weights[j] - chi);
    }
    CHECK(moved.lambda == base.lambda + fp.size() * chi);
    CHECK(moved.tangent == base.tangent);
  }
}

TEST_CASE("Euler class of the tangent space") {
  const Specialization spec{1, 5, 0};
  CHECK(hilb::euler_class(at_chart(0, {1}), spec) == 5);
  // 2 * (5 - 1) * 1 * 5
  CHECK(hilb::euler_class(at_chart(0, {2}), spec) == 40);

  const Specialization diagonal{4, 4, 0};
  CHECK_THROWS_AS(hilb::euler_class(at_chart(1, {1}), diagonal), hilb::DegenerateSpecialization);
  CHECK_FALSE(hilb::is_generic_for(at_chart(2, {1}), diagonal));
  CHECK(hilb::is_generic_for(at_chart(0, {1}), diagonal));
  CHECK_THROWS_AS(hilb::euler_class(at_chart(0, {1}), Specialization{0, 3, 0}),
                  hilb::DegenerateSpecialization);

  bool some_degenerate = false;
  for (const auto& fp : hilb::enumerate_fixed_points(3)) {
    some_degenerate = some_degenerate || !hilb::is_generic_for(fp, diagonal);
  }
  CHECK(some_degenerate);
}
