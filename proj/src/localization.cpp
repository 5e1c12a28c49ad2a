#include "hilb/localization.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "hilb/errors.hpp"
#include "hilb/random.hpp"

namespace hilb {

namespace {

constexpr std::int64_t kWeightBound = 1'000'000;

}  // namespace

std::string to_string(const IntegrandSpec& spec) {
  std::string out;
  if (spec.i > 0) {
    out = "c1(L)";
    if (spec.i > 1) out += "^" + std::to_string(spec.i);
  }
  if (spec.k > 0 || spec.i == 0) {
    if (!out.empty()) out += " * ";
    out += "s" + std::to_string(spec.k) + "(E*L)";
  }
  return out;
}

std::vector<ExactRational> elementary_symmetric(std::span<const ExactRational> values,
                                                std::size_t up_to) {
  if (up_to > values.size()) {
    throw std::invalid_argument("elementary_symmetric: up_to exceeds the number of values");
  }
  std::vector<ExactRational> e(up_to + 1, ExactRational(0));
  e[0] = 1;
  std::size_t filled = 0;
  for (const ExactRational& x : values) {
    filled = std::min(filled + 1, up_to);
    for (std::size_t j = filled; j >= 1; --j) e[j] += x * e[j - 1];
  }
  return e;
}

std::vector<ExactRational> segre_coefficients(std::span<const ExactRational> chern,
                                              std::size_t k) {
  if (chern.empty() || chern[0] != 1) {
    throw std::invalid_argument("segre_coefficients: chern[0] must be 1");
  }
  const std::size_t rank = chern.size() - 1;
  std::vector<ExactRational> s(k + 1, ExactRational(0));
  s[0] = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    ExactRational acc = 0;
    for (std::size_t l = 1; l <= std::min(j, rank); ++l) acc += chern[l] * s[j - l];
    s[j] = -acc;
  }
  return s;
}

ExactRational integrand_at(const FixedPoint& fp, const Specialization& spec,
                           IntegrandSpec integrand, const Linearization& lin) {
  const ExactRational euler = euler_class(fp, spec);
  const FixedPointWeights weights = fixed_point_weights(fp, lin);
  const std::int64_t lambda = evaluate(weights.lambda, spec);

  ExactRational numerator = 1;
  if (integrand.i > 0) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), make_rational(lambda).get_num_mpz_t(),
               static_cast<unsigned long>(integrand.i));
    numerator = ExactRational(power);
  }
  if (integrand.k > 0) {
    std::vector<ExactRational> dual_roots;
    dual_roots.reserve(weights.e_weights.size());
    for (const WeightForm& e : weights.e_weights) {
      dual_roots.push_back(make_rational(-(evaluate(e, spec) + lambda)));
    }
    const auto chern = elementary_symmetric(dual_roots, dual_roots.size());
    const auto segre = segre_coefficients(chern, static_cast<std::size_t>(integrand.k));
    numerator *= segre.back();
  }
  return numerator / euler;
}

ExactRational sum_over_fixed_points(std::span<const FixedPoint> points,
                                    const Specialization& spec, IntegrandSpec integrand,
                                    const Linearization& lin, unsigned threads) {
  const std::size_t chunks =
      std::max<std::size_t>(1, std::min<std::size_t>(threads, points.size()));
  std::vector<ExactRational> partial(chunks, ExactRational(0));

  auto work = [&](std::size_t chunk) {
    const std::size_t begin = points.size() * chunk / chunks;
    const std::size_t end = points.size() * (chunk + 1) / chunks;
    ExactRational acc = 0;
    for (std::size_t j = begin; j < end; ++j) {
      acc += integrand_at(points[j], spec, integrand, lin);
    }
    partial[chunk] = std::move(acc);
  };

  if (chunks == 1) {
    work(0);
  } else {
    std::vector<std::exception_ptr> errors(chunks);
    {
      std::vector<std::jthread> pool;
      pool.reserve(chunks);
      for (std::size_t c = 0; c < chunks; ++c) {
        pool.emplace_back([&, c] {
          try {
            work(c);
          } catch (...) {
            errors[c] = std::current_exception();
          }
        });
      }
    }
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }

  ExactRational total = 0;
  for (const ExactRational& p : partial) total += p;
  return total;
}

Specialization sample_specialization(std::span<const FixedPoint> points,
                                     std::uint64_t seed, int max_resamples) {
  SeededStream stream(seed);
  for (int attempt = 0; attempt < max_resamples; ++attempt) {
    Specialization spec{stream.uniform(-kWeightBound, kWeightBound),
                        stream.uniform(-kWeightBound, kWeightBound), seed};
    if (spec.w1 == 0 || spec.w2 == 0 || spec.w1 == spec.w2) continue;
    const bool generic = std::all_of(points.begin(), points.end(), [&](const FixedPoint& fp) {
      return is_generic_for(fp, spec);
    });
    if (generic) return spec;
  }
  throw SpecializationExhausted("no generic specialization found after " +
                                std::to_string(max_resamples) + " draws (seed " +
                                std::to_string(seed) + ")");
}

IntegralResult integrate(int m, IntegrandSpec integrand, const IntegrationConfig& config) {
  if (m < 0 || integrand.i < 0 || integrand.k < 0) {
    throw std::invalid_argument("integrate: negative length or exponent");
  }
  if (integrand.degree() > 2 * m) {
    throw DegreeMismatch("integrand " + to_string(integrand) + " has degree " +
                         std::to_string(integrand.degree()) + " > dim Hilb^" +
                         std::to_string(m) + " = " + std::to_string(2 * m));
  }

  const std::vector<FixedPoint> points = enumerate_fixed_points(m);
  const Specialization first = sample_specialization(points, config.seed, config.max_resamples);

  Specialization second;
  bool found = false;
  for (std::uint64_t index = 0; index < static_cast<std::uint64_t>(config.max_resamples); ++index) {
    second = sample_specialization(points, derive_seed(config.seed, index), config.max_resamples);
    if (second.w1 != first.w1 || second.w2 != first.w2) {
      found = true;
      break;
    }
  }
  if (!found) throw SpecializationExhausted("no distinct cross-check specialization found");

  IntegralResult result;
  result.m = m;
  result.integrand = integrand;
  result.spec_used = first;
  result.cross_check_spec = second;
  result.fixed_point_count = points.size();
  result.value = sum_over_fixed_points(points, first, integrand, config.linearization, config.threads);
  const ExactRational check =
      sum_over_fixed_points(points, second, integrand, config.linearization, config.threads);
  if (check != result.value) {
    throw SpecializationMismatch("integral of " + to_string(integrand) + " on Hilb^" +
                                 std::to_string(m) + " differs between specializations: " +
                                 to_string(result.value) + " vs " + to_string(check));
  }
  return result;
}

}  // namespace hilb
