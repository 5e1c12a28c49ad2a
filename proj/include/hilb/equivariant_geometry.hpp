#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hilb/exact_rational.hpp"
#include "hilb/partitions.hpp"

namespace hilb {

// Integer linear form a*w1 + b*w2 in the torus parameters. Every equivariant
// character in the engine is one of these.
struct WeightForm {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const WeightForm&, const WeightForm&) = default;

  WeightForm& operator+=(const WeightForm& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  WeightForm& operator-=(const WeightForm& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  friend WeightForm operator+(WeightForm x, const WeightForm& y) { return x += y; }
  friend WeightForm operator-(WeightForm x, const WeightForm& y) { return x -= y; }
  friend WeightForm operator-(const WeightForm& x) { return {-x.a, -x.b}; }
  friend WeightForm operator*(std::int64_t k, const WeightForm& x) {
    return {k * x.a, k * x.b};
  }
};

inline constexpr WeightForm kW1{1, 0};
inline constexpr WeightForm kW2{0, 1};

std::string to_string(const WeightForm& w);

// Integer values substituted for (w1, w2). `seed` records which random
// stream produced the pair so a run can be reproduced.
struct Specialization {
  std::int64_t w1 = 0;
  std::int64_t w2 = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const Specialization&, const Specialization&) = default;
};

// Weight values stay far below 2^62 for |w| <= 1e6 and m of desk scale.
inline std::int64_t evaluate(const WeightForm& w, const Specialization& s) {
  return w.a * s.w1 + w.b * s.w2;
}

// Lift of the torus action to O(1). The section basis {x0, x1, x2} carries
// characters {shift, w1 + shift, w2 + shift}; the default shift is zero.
// Every integral is independent of the shift, which the tests exercise.
struct Linearization {
  WeightForm shift{};
};

// Local data at the fixed point p_chart of P^2 under
// t.[x0:x1:x2] = [x0 : t1 x1 : t2 x2].
struct ChartFrame {
  int chart = 0;
  std::array<WeightForm, 2> coord_weights;
  WeightForm line_weight;  // character of the section x_chart trivializing O(1)
};

// Chart 0: (w1, w2); chart 1: (-w1, w2 - w1); chart 2: (-w2, w1 - w2).
ChartFrame chart_frame(int chart, const Linearization& lin = {});

struct FixedPointWeights {
  std::vector<WeightForm> tangent;    // 2m forms
  std::vector<WeightForm> e_weights;  // m forms, fiber of E
  WeightForm lambda;                  // c1(L)
};

// Tangent space of Hilb^m(P^2) at fp. A cell s of the partition in a chart
// with coordinate weights (u, v) contributes
//   (arm(s) + 1) u - leg(s) v   and   -arm(s) u + (leg(s) + 1) v.
std::vector<WeightForm> tangent_weights(const FixedPoint& fp);

// Characters of H^0(O_Z(twist)): the monomial x^col y^row at a cell of chart
// c has weight col*u + row*v + twist * line_weight(c).
std::vector<WeightForm> oz_weights(const FixedPoint& fp, int twist,
                                   const Linearization& lin = {});

// Fiber of E = R^1 p_* (I_Z(-1)), identified with H^0(O_Z(-1)).
std::vector<WeightForm> e_weights(const FixedPoint& fp, const Linearization& lin = {});

// c1(L) for L = det G (x) det E^-1, where G's fiber is H^0(O_Z) minus one
// trivial character. Equals sum over charts of |mu_c| * line_weight(c).
WeightForm lambda_weight(const FixedPoint& fp, const Linearization& lin = {});

FixedPointWeights fixed_point_weights(const FixedPoint& fp,
                                      const Linearization& lin = {});

// Product of the specialized tangent weights. Throws DegenerateSpecialization
// if any factor is zero.
ExactRational euler_class(const FixedPoint& fp, const Specialization& spec);

// True when every tangent weight of fp is nonzero under spec.
bool is_generic_for(const FixedPoint& fp, const Specialization& spec);

}  // namespace hilb
