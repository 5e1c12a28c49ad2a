#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hilb/equivariant_geometry.hpp"
#include "hilb/exact_rational.hpp"
#include "hilb/partitions.hpp"

namespace hilb {

// The class c1(L)^i * s_k(E (x) L) on H_m. Integrable to a number when
// i + k <= 2m; the integral is zero unless i + k == 2m.
struct IntegrandSpec {
  int i = 0;
  int k = 0;

  int degree() const noexcept { return i + k; }
  friend bool operator==(const IntegrandSpec&, const IntegrandSpec&) = default;
};

std::string to_string(const IntegrandSpec& spec);

struct IntegrationConfig {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  Linearization linearization{};
  int max_resamples = 64;
};

struct IntegralResult {
  ExactRational value;
  int m = 0;
  IntegrandSpec integrand;
  Specialization spec_used;
  Specialization cross_check_spec;
  std::size_t fixed_point_count = 0;
};

// e_0 = 1, e_1, ..., e_{up_to} of `values` (one-pass product recurrence).
std::vector<ExactRational> elementary_symmetric(std::span<const ExactRational> values,
                                                std::size_t up_to);

// s_0 = 1, ..., s_k of the inverse series 1 / (1 + c_1 + c_2 + ...):
// s_j = -sum_{l=1}^{min(j, rank)} c_l s_{j-l}. Requires chern[0] == 1.
std::vector<ExactRational> segre_coefficients(std::span<const ExactRational> chern,
                                              std::size_t k);

// Localization summand lambda^i * s_k(E (x) L) / e(T) at one fixed point.
// s_k is the Segre class pushed forward from the projective bundle of
// rank-one quotients of E (x) L, i.e. the inverse-series coefficient of
// the dual bundle, with Chern roots -(e_j + lambda).
ExactRational integrand_at(const FixedPoint& fp, const Specialization& spec,
                           IntegrandSpec integrand, const Linearization& lin = {});

// Exact sum of integrand_at over `points`, split into `threads` contiguous
// chunks and folded in chunk order.
ExactRational sum_over_fixed_points(std::span<const FixedPoint> points,
                                    const Specialization& spec, IntegrandSpec integrand,
                                    const Linearization& lin = {}, unsigned threads = 1);

// First specialization drawn from the stream of `seed` that makes every
// tangent weight of every point nonzero. Values lie in [-10^6, 10^6].
Specialization sample_specialization(std::span<const FixedPoint> points,
                                     std::uint64_t seed, int max_resamples = 64);

// Integral over Hilb^m(P^2) by fixed-point summation, evaluated under two
// independent specializations that must agree.
IntegralResult integrate(int m, IntegrandSpec integrand, const IntegrationConfig& config = {});

}  // namespace hilb
