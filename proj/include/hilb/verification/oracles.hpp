#pragma once

// Independent reference computations. Nothing here calls into the code paths
// it is used to check: counts come from power series, symmetric functions
// from explicit polynomial products, and the determinantal curve from a
// closed-form product of linear forms.

#include <cstdint>
#include <span>
#include <vector>

#include "hilb/barth_witness.hpp"
#include "hilb/exact_rational.hpp"

namespace hilb::oracle {

// Number of partitions of m, counted over multiplicity vectors
// (c_1, ..., c_m) with sum j * c_j = m.
std::uint64_t partition_count(int m);

// Coefficient of q^m in prod_{k >= 1} (1 - q^k)^{-3}.
std::uint64_t fixed_point_count(int m);

// Coefficients of prod_j (1 + x_j t), degrees 0..values.size().
std::vector<ExactRational> product_expansion(std::span<const ExactRational> values);

// Coefficients 0..k of 1 / c(t), computed as sum_{r >= 0} (1 - c(t))^r
// truncated at degree k.
std::vector<ExactRational> series_inverse(std::span<const ExactRational> chern, std::size_t k);

// sum_j eps_j prod_{i != j} (xi . z_i), with z_i the normalized
// representatives, expanded in monomial_exponents(n) order.
PlaneCurve closed_form_barth_curve(std::span<const ProjectivePoint> points,
                                   std::span<const ExactRational> extension);

}  // namespace hilb::oracle
