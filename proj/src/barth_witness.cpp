#include "hilb/barth_witness.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hilb/errors.hpp"
#include "hilb/exact_linalg.hpp"
#include "hilb/random.hpp"

namespace hilb {

namespace {

constexpr std::int64_t kCoordinateBound = 9;
constexpr int kMaxConfigurationDraws = 1000;

ExactRational dot(const ProjectivePoint& a, const ProjectivePoint& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

ProjectivePoint cross(const ProjectivePoint& a, const ProjectivePoint& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero_point(const ProjectivePoint& z) {
  return z[0] == 0 && z[1] == 0 && z[2] == 0;
}

ExactRational monomial_value(const std::array<int, 3>& exponent, const ProjectivePoint& xi) {
  ExactRational value = 1;
  for (int v = 0; v < 3; ++v) {
    for (int e = 0; e < exponent[v]; ++e) value *= xi[v];
  }
  return value;
}

// Any three collinear points (repeats included) violate the configuration.
bool has_collinear_triple(const std::vector<ProjectivePoint>& points) {
  const std::size_t count = points.size();
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      for (std::size_t c = b + 1; c < count; ++c) {
        if (determinant3(points[a], points[b], points[c]) == 0) return true;
      }
    }
  }
  return false;
}

}  // namespace

ExactRational determinant3(const ProjectivePoint& a, const ProjectivePoint& b,
                           const ProjectivePoint& c) {
  return dot(a, cross(b, c));
}

PlaneConfiguration::PlaneConfiguration(std::vector<ProjectivePoint> points)
    : points_(std::move(points)) {
  if (points_.size() < 3) {
    throw std::invalid_argument("a configuration needs at least 3 points");
  }
  if (std::any_of(points_.begin(), points_.end(), is_zero_point)) {
    throw std::invalid_argument("zero vector is not a point of P^2");
  }
  if (has_collinear_triple(points_)) {
    throw std::invalid_argument("three collinear points (three concurrent dual lines)");
  }
}

std::vector<ProjectivePoint> PlaneConfiguration::nodes() const {
  std::vector<ProjectivePoint> out;
  for (std::size_t a = 0; a < points_.size(); ++a) {
    for (std::size_t b = a + 1; b < points_.size(); ++b) {
      out.push_back(cross(points_[a], points_[b]));
    }
  }
  return out;
}

std::vector<std::array<int, 3>> monomial_exponents(int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<std::array<int, 3>> out;
  for (int a = degree; a >= 0; --a) {
    for (int b = degree - a; b >= 0; --b) out.push_back({a, b, degree - a - b});
  }
  return out;
}

ExactRational PlaneCurve::evaluate(const ProjectivePoint& xi) const {
  const auto exponents = monomial_exponents(degree);
  ExactRational value = 0;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (coefficients[j] != 0) value += coefficients[j] * monomial_value(exponents[j], xi);
  }
  return value;
}

bool PlaneCurve::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const ExactRational& c) { return c == 0; });
}

PlaneCurve PlaneCurve::normalized() const {
  PlaneCurve out = *this;
  const auto lead = std::find_if(coefficients.begin(), coefficients.end(),
                                 [](const ExactRational& c) { return c != 0; });
  if (lead == coefficients.end()) return out;
  const ExactRational scale = *lead;
  for (auto& c : out.coefficients) c /= scale;
  return out;
}

bool proportional(const PlaneCurve& a, const PlaneCurve& b) {
  if (a.degree != b.degree || a.is_zero() || b.is_zero()) return false;
  return a.normalized().coefficients == b.normalized().coefficients;
}

ProjectivePoint normalized_representative(const ProjectivePoint& z) {
  for (const ExactRational& coordinate : z) {
    if (coordinate != 0) return {z[0] / coordinate, z[1] / coordinate, z[2] / coordinate};
  }
  throw std::invalid_argument("zero vector is not a point of P^2");
}

PlaneConfiguration sample_configuration(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("sample_configuration requires n >= 2");
  SeededStream stream(seed);
  for (int draw = 0; draw < kMaxConfigurationDraws; ++draw) {
    std::vector<ProjectivePoint> points;
    bool ok = true;
    for (int j = 0; j <= n; ++j) {
      ProjectivePoint z;
      for (auto& coordinate : z) {
        coordinate = make_rational(stream.uniform(-kCoordinateBound, kCoordinateBound));
      }
      if (is_zero_point(z)) {
        ok = false;
        break;
      }
      points.push_back(z);
    }
    if (ok && !has_collinear_triple(points)) return PlaneConfiguration(std::move(points));
  }
  throw SamplingExhausted("no generic configuration of " + std::to_string(n + 1) +
                          " points after " + std::to_string(kMaxConfigurationDraws) + " draws");
}

std::vector<ExactRational> sample_extension(int n, std::uint64_t seed) {
  SeededStream stream(derive_seed(seed, 0x45787431));
  std::vector<ExactRational> extension(n + 1);
  do {
    for (auto& e : extension) e = make_rational(stream.uniform(-9, 9));
  } while (std::all_of(extension.begin(), extension.end(),
                       [](const ExactRational& e) { return e == 0; }));
  return extension;
}

PlaneCurve determinantal_curve(std::span<const ProjectivePoint> points,
                               std::span<const ExactRational> extension) {
  if (points.size() < 3) throw std::invalid_argument("need at least 3 points");
  if (extension.size() != points.size()) {
    throw std::invalid_argument("extension length must equal the number of points");
  }
  const auto pivot_it = std::find_if(extension.begin(), extension.end(),
                                     [](const ExactRational& e) { return e != 0; });
  if (pivot_it == extension.end()) {
    throw std::invalid_argument("zero extension class (split sequence)");
  }
  const std::size_t pivot = static_cast<std::size_t>(pivot_it - extension.begin());
  const int n = static_cast<int>(points.size()) - 1;
  const std::size_t rank = static_cast<std::size_t>(n);

  std::vector<ProjectivePoint> reps;
  reps.reserve(points.size());
  for (const auto& z : points) reps.push_back(normalized_representative(z));

  // Basis of ker(extension): v_j = e_j - (eps_j / eps_p) e_p for j != p.
  std::vector<std::size_t> basis;
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (j != pivot) basis.push_back(j);
  }

  // Multiplication by xi in the chosen bases. The target H^0(O_Z)/constants
  // has coordinates psi_r - psi_last, r < last.
  const std::size_t last = points.size() - 1;
  auto multiplication_matrix = [&](const ProjectivePoint& xi) {
    std::vector<ExactRational> d(points.size());
    for (std::size_t j = 0; j < points.size(); ++j) d[j] = dot(xi, reps[j]);
    RationalMatrix m(rank, rank);
    for (std::size_t col = 0; col < rank; ++col) {
      const std::size_t j = basis[col];
      std::vector<ExactRational> image(points.size(), ExactRational(0));
      image[j] += d[j];
      image[pivot] -= extension[j] / extension[pivot] * d[pivot];
      for (std::size_t r = 0; r < rank; ++r) m(r, col) = image[r] - image[last];
    }
    return m;
  };

  // Interpolate the determinant on the principal lattice {(1, a, b) : a + b <= n},
  // which is unisolvent for forms of degree n.
  const auto exponents = monomial_exponents(n);
  RationalMatrix vandermonde(exponents.size(), exponents.size());
  std::vector<ExactRational> values(exponents.size());
  std::size_t row = 0;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b, ++row) {
      const ProjectivePoint xi{ExactRational(1), ExactRational(a), ExactRational(b)};
      for (std::size_t col = 0; col < exponents.size(); ++col) {
        vandermonde(row, col) = monomial_value(exponents[col], xi);
      }
      values[row] = determinant(multiplication_matrix(xi));
    }
  }

  PlaneCurve curve{n, solve(vandermonde, values)};
  if (curve.is_zero()) {
    throw DegenerateDatum("multiplication map is degenerate everywhere; resample the extension");
  }
  return curve;
}

PlaneCurve barth_curve(const HulsbergenDatum& datum) {
  if (datum.extension.size() != datum.config.points().size()) {
    throw std::invalid_argument("extension length must equal the number of points");
  }
  return determinantal_curve(datum.config.points(), datum.extension);
}

bool verify_darboux(const PlaneConfiguration& config, const PlaneCurve& curve) {
  if (curve.degree != config.n() || curve.is_zero()) return false;
  const auto nodes = config.nodes();
  return std::all_of(nodes.begin(), nodes.end(),
                     [&](const ProjectivePoint& node) { return curve.evaluate(node) == 0; });
}

int darboux_system_dimension(const PlaneConfiguration& config) {
  const auto exponents = monomial_exponents(config.n());
  const auto nodes = config.nodes();
  RationalMatrix evaluation(nodes.size(), exponents.size());
  for (std::size_t r = 0; r < nodes.size(); ++r) {
    for (std::size_t c = 0; c < exponents.size(); ++c) {
      evaluation(r, c) = monomial_value(exponents[c], nodes[r]);
    }
  }
  return static_cast<int>(exponents.size() - rank(evaluation)) - 1;
}

}  // namespace hilb
