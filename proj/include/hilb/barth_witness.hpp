#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hilb/exact_rational.hpp"

namespace hilb {

// Homogeneous coordinates in P^2 (or, read as line coefficients, in the
// dual plane).
using ProjectivePoint = std::array<ExactRational, 3>;

// n + 1 points of P^2, no three collinear. The point z_j is dual to the line
// {xi : xi . z_j = 0} of the dual plane, so the condition says no three dual
// lines are concurrent.
class PlaneConfiguration {
 public:
  // Throws std::invalid_argument when fewer than 3 points are given, a point
  // is zero, or three points are collinear (which includes repeated points).
  explicit PlaneConfiguration(std::vector<ProjectivePoint> points);

  int n() const noexcept { return static_cast<int>(points_.size()) - 1; }
  const std::vector<ProjectivePoint>& points() const noexcept { return points_; }
  // Coefficients of the dual lines; identical numbers to points().
  const std::vector<ProjectivePoint>& dual_lines() const noexcept { return points_; }

  // The n(n+1)/2 pairwise intersections of dual lines: the node for the pair
  // (a, b) is the line through z_a and z_b, i.e. z_a x z_b.
  std::vector<ProjectivePoint> nodes() const;

 private:
  std::vector<ProjectivePoint> points_;
};

// A Hulsbergen extension over a configuration. `extension` is the functional
// on H^0(O_Z(-1)) pairing the extension class, written in the trivialization
// of normalized_representative(); nonzero and defined up to scale.
struct HulsbergenDatum {
  PlaneConfiguration config;
  std::vector<ExactRational> extension;
};

// Homogeneous form of degree `degree` in the dual coordinates
// (xi0, xi1, xi2). Coefficients follow monomial_exponents(degree).
struct PlaneCurve {
  int degree = 0;
  std::vector<ExactRational> coefficients;

  ExactRational evaluate(const ProjectivePoint& xi) const;
  bool is_zero() const;
  // Scaled so the first nonzero coefficient is 1.
  PlaneCurve normalized() const;
};

// Exponent triples (a, b, c), a + b + c = degree, with a descending and then
// b descending: xi0^d, xi0^{d-1} xi1, xi0^{d-1} xi2, ...
std::vector<std::array<int, 3>> monomial_exponents(int degree);

bool proportional(const PlaneCurve& a, const PlaneCurve& b);

// The representative of z divided by its first nonzero coordinate. This
// fixes the trivialization of O(-1) at z.
ProjectivePoint normalized_representative(const ProjectivePoint& z);

ExactRational determinant3(const ProjectivePoint& a, const ProjectivePoint& b,
                           const ProjectivePoint& c);

// n + 1 points with integer coordinates in [-9, 9] satisfying the
// configuration invariant; deterministic per seed. Throws SamplingExhausted
// after a bounded number of rejected draws.
PlaneConfiguration sample_configuration(int n, std::uint64_t seed);

// Nonzero integer extension vector of length n + 1; deterministic per seed.
std::vector<ExactRational> sample_extension(int n, std::uint64_t seed);

// Determinant of the multiplication map
//   m(xi) : H^1(F(-2)) -> H^1(F(-1)),
// realized as
//   ker(extension) in H^0(O_Z(-1)) --diag(xi . z_j)--> H^0(O_Z) / constants,
// as a form of degree n in xi. The points are not checked for genericity.
// Throws DegenerateDatum when the determinant vanishes identically and
// std::invalid_argument on shape errors or a zero extension.
PlaneCurve determinantal_curve(std::span<const ProjectivePoint> points,
                               std::span<const ExactRational> extension);

// determinantal_curve on a validated datum.
PlaneCurve barth_curve(const HulsbergenDatum& datum);

// True iff the curve vanishes at every node of the configuration.
bool verify_darboux(const PlaneConfiguration& config, const PlaneCurve& curve);

// Projective dimension of the linear system of degree-n curves in the dual
// plane through all nodes.
int darboux_system_dimension(const PlaneConfiguration& config);

}  // namespace hilb
