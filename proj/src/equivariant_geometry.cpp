#include "hilb/equivariant_geometry.hpp"

#include <stdexcept>

#include "hilb/errors.hpp"

namespace hilb {

std::string to_string(const WeightForm& w) {
  return std::to_string(w.a) + "*w1 " + (w.b < 0 ? "- " : "+ ") +
         std::to_string(w.b < 0 ? -w.b : w.b) + "*w2";
}

ChartFrame chart_frame(int chart, const Linearization& lin) {
  switch (chart) {
    case 0:
      return {0, {kW1, kW2}, lin.shift};
    case 1:
      return {1, {-kW1, kW2 - kW1}, kW1 + lin.shift};
    case 2:
      return {2, {-kW2, kW1 - kW2}, kW2 + lin.shift};
    default:
      throw std::out_of_range("chart index must be 0, 1 or 2");
  }
}

std::vector<WeightForm> tangent_weights(const FixedPoint& fp) {
  std::vector<WeightForm> out;
  out.reserve(2 * fp.size());
  for (int c = 0; c < 3; ++c) {
    const auto [u, v] = chart_frame(c).coord_weights;
    for (const Cell& s : cells(fp.mu[c])) {
      out.push_back((s.arm + 1) * u - s.leg * v);
      out.push_back(-s.arm * u + (s.leg + 1) * v);
    }
  }
  return out;
}

std::vector<WeightForm> oz_weights(const FixedPoint& fp, int twist,
                                   const Linearization& lin) {
  std::vector<WeightForm> out;
  out.reserve(fp.size());
  for (int c = 0; c < 3; ++c) {
    const ChartFrame frame = chart_frame(c, lin);
    const auto [u, v] = frame.coord_weights;
    for (const Cell& s : cells(fp.mu[c])) {
      out.push_back(s.col * u + s.row * v + twist * frame.line_weight);
    }
  }
  return out;
}

std::vector<WeightForm> e_weights(const FixedPoint& fp, const Linearization& lin) {
  return oz_weights(fp, -1, lin);
}

WeightForm lambda_weight(const FixedPoint& fp, const Linearization& lin) {
  WeightForm lambda;
  for (const WeightForm& w : oz_weights(fp, 0, lin)) lambda += w;
  for (const WeightForm& w : oz_weights(fp, -1, lin)) lambda -= w;
  return lambda;
}

FixedPointWeights fixed_point_weights(const FixedPoint& fp, const Linearization& lin) {
  return {tangent_weights(fp), e_weights(fp, lin), lambda_weight(fp, lin)};
}

bool is_generic_for(const FixedPoint& fp, const Specialization& spec) {
  for (const WeightForm& w : tangent_weights(fp)) {
    if (evaluate(w, spec) == 0) return false;
  }
  return true;
}

ExactRational euler_class(const FixedPoint& fp, const Specialization& spec) {
  BigInt product = 1;
  for (const WeightForm& w : tangent_weights(fp)) {
    const std::int64_t value = evaluate(w, spec);
    if (value == 0) {
      throw DegenerateSpecialization("tangent weight " + to_string(w) +
                                     " vanishes at (w1, w2) = (" +
                                     std::to_string(spec.w1) + ", " +
                                     std::to_string(spec.w2) + ") for " +
                                     to_string(fp));
    }
    product *= make_rational(value).get_num();
  }
  return ExactRational(product);
}

}  // namespace hilb
