#include "hilb/verification/oracles.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace hilb::oracle {

namespace {

std::uint64_t count_multiplicities(int remaining, int part) {
  if (remaining == 0) return 1;
  if (part == 0) return 0;
  std::uint64_t total = 0;
  for (int copies = 0; copies * part <= remaining; ++copies) {
    total += count_multiplicities(remaining - copies * part, part - 1);
  }
  return total;
}

using Exponent = std::array<int, 3>;
using SparseForm = std::map<Exponent, ExactRational>;

SparseForm multiply(const SparseForm& f, const SparseForm& g) {
  SparseForm out;
  for (const auto& [ef, cf] : f) {
    for (const auto& [eg, cg] : g) {
      out[{ef[0] + eg[0], ef[1] + eg[1], ef[2] + eg[2]}] += cf * cg;
    }
  }
  return out;
}

}  // namespace

std::uint64_t partition_count(int m) {
  if (m < 0) throw std::invalid_argument("negative m");
  return count_multiplicities(m, m);
}

std::uint64_t fixed_point_count(int m) {
  if (m < 0) throw std::invalid_argument("negative m");
  std::vector<std::uint64_t> series(m + 1, 0);
  series[0] = 1;
  for (int copy = 0; copy < 3; ++copy) {
    for (int k = 1; k <= m; ++k) {
      // Multiply by 1 / (1 - q^k) = 1 + q^k + q^{2k} + ...
      for (int d = k; d <= m; ++d) series[d] += series[d - k];
    }
  }
  return series[m];
}

std::vector<ExactRational> product_expansion(std::span<const ExactRational> values) {
  std::vector<ExactRational> poly{ExactRational(1)};
  for (const ExactRational& x : values) {
    std::vector<ExactRational> next(poly.size() + 1, ExactRational(0));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d] += poly[d];
      next[d + 1] += poly[d] * x;
    }
    poly = std::move(next);
  }
  return poly;
}

std::vector<ExactRational> series_inverse(std::span<const ExactRational> chern, std::size_t k) {
  // u(t) = 1 - c(t) has no constant term, so (u^r)_j = 0 for r > j.
  if (chern.empty() || chern[0] != 1) throw std::invalid_argument("chern[0] must be 1");
  std::vector<ExactRational> u(k + 1, ExactRational(0));
  for (std::size_t j = 1; j < chern.size() && j <= k; ++j) u[j] = -chern[j];

  std::vector<ExactRational> result(k + 1, ExactRational(0));
  std::vector<ExactRational> power(k + 1, ExactRational(0));
  power[0] = 1;
  for (std::size_t r = 0; r <= k; ++r) {
    for (std::size_t j = 0; j <= k; ++j) result[j] += power[j];
    std::vector<ExactRational> next(k + 1, ExactRational(0));
    for (std::size_t a = 0; a <= k; ++a) {
      if (power[a] == 0) continue;
      for (std::size_t b = 1; a + b <= k; ++b) next[a + b] += power[a] * u[b];
    }
    power = std::move(next);
  }
  return result;
}

PlaneCurve closed_form_barth_curve(std::span<const ProjectivePoint> points,
                                   std::span<const ExactRational> extension) {
  const int n = static_cast<int>(points.size()) - 1;
  std::vector<SparseForm> linear;
  for (const auto& z : points) {
    const ProjectivePoint rep = normalized_representative(z);
    linear.push_back({{{1, 0, 0}, rep[0]}, {{0, 1, 0}, rep[1]}, {{0, 0, 1}, rep[2]}});
  }
  SparseForm total;
  for (std::size_t j = 0; j < points.size(); ++j) {
    SparseForm term{{{0, 0, 0}, extension[j]}};
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i != j) term = multiply(term, linear[i]);
    }
    for (const auto& [e, c] : term) total[e] += c;
  }
  PlaneCurve curve{n, {}};
  for (const auto& e : monomial_exponents(n)) {
    const auto it = total.find(e);
    curve.coefficients.push_back(it == total.end() ? ExactRational(0) : it->second);
  }
  return curve;
}

}  // namespace hilb::oracle
