#include "hilb/verification/acceptance.hpp"

#include <array>
#include <chrono>
#include <exception>
#include <sstream>

#include "hilb/barth_witness.hpp"
#include "hilb/invariants.hpp"
#include "hilb/localization.hpp"
#include "hilb/partitions.hpp"
#include "hilb/random.hpp"
#include "hilb/verification/oracles.hpp"

namespace hilb::acceptance {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (!passed) detail << "; ";
    else detail.str("");
    passed = false;
    detail << why;
  }
};

// q_5, q_9, q_13, q_17, q_21.
constexpr std::array<long, 5> kPublishedQ{1, 3, 54, 2540, 233208};
constexpr double kPublishedRuntimeLimitMs = 60'000;
constexpr int kVanishingMaxM = 5;
constexpr int kCountMaxM = 12;
constexpr int kWitnessSeeds = 20;
constexpr int kSpecializationSamples = 3;

IntegrationConfig config_for(const Options& options, unsigned threads = 1) {
  IntegrationConfig config;
  config.seed = options.seed;
  config.threads = threads;
  return config;
}

void published_integers(const Options& options, Outcome& out) {
  const auto start = std::chrono::steady_clock::now();
  for (int n = 2; n <= 6; ++n) {
    const auto result = donaldson_q(n, config_for(options, options.parallel_threads));
    const long expected = kPublishedQ[n - 2];
    out.detail << "q_" << 4 * n - 3 << "=" << result.q << " ";
    if (result.q != expected) {
      out.fail("q_" + std::to_string(4 * n - 3) + " = " + result.q.get_str() + ", expected " +
               std::to_string(expected));
    }
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (ms > kPublishedRuntimeLimitMs) out.fail("runtime " + std::to_string(ms) + " ms exceeds 60 s");
}

void raw_q17_q21_integrals(const Options& options, Outcome& out) {
  const auto h6 = integrate(6, {0, 12}, config_for(options, options.parallel_threads));
  const auto h7 = integrate(7, {0, 14}, config_for(options, options.parallel_threads));
  out.detail << "int_H6 s12 = " << h6.value << ", int_H7 s14 = " << h7.value;
  if (h6.value != 2540) out.fail("int_H6 s12(E*L) = " + h6.value.get_str() + ", expected 2540");
  if (h7.value != 583020) out.fail("int_H7 s14(E*L) = " + h7.value.get_str() + ", expected 583020");
}

void donaldson_darboux_identity(const Options& options, Outcome& out) {
  for (int n = 2; n <= 5; ++n) {
    const auto q = donaldson_q(n, config_for(options));
    const auto darboux = darboux_count(n, 5 - n, config_for(options));
    const ExactRational scaled = ExactRational(1 << (5 - n)) * q.q;
    out.detail << "n=" << n << ":" << scaled << "=" << darboux.count << " ";
    if (scaled != darboux.count) {
      out.fail("n = " + std::to_string(n) + ": 2^(5-n) q = " + scaled.get_str() +
               " but darboux count = " + darboux.count.get_str());
    }
  }
}

void specialization_independence(const Options& options, Outcome& out) {
  for (int n = 2; n <= 6; ++n) {
    const IntegrandSpec integrand = donaldson_integrand(n);
    const int m = n + 1;
    const auto points = enumerate_fixed_points(m);
    std::vector<std::string> values;
    for (int s = 0; s < kSpecializationSamples; ++s) {
      const Specialization spec =
          sample_specialization(points, derive_seed(options.seed, 1000 + s));
      values.push_back(
          sum_over_fixed_points(points, spec, integrand, {}, options.parallel_threads).get_str());
    }
    out.detail << "m=" << m << ":" << values.front() << " ";
    for (const auto& v : values) {
      if (v != values.front()) {
        out.fail("m = " + std::to_string(m) + " " + to_string(integrand) + ": " + values.front() +
                 " vs " + v);
      }
    }
  }
}

void vanishing(const Options& options, Outcome& out) {
  int checked = 0;
  for (int m = 1; m <= kVanishingMaxM; ++m) {
    for (int i = 0; i < 2 * m; ++i) {
      for (int k = 0; i + k < 2 * m; ++k) {
        const auto r = integrate(m, {i, k}, config_for(options));
        ++checked;
        if (r.value != 0) {
          out.fail("m = " + std::to_string(m) + " " + to_string(IntegrandSpec{i, k}) + " = " +
                   r.value.get_str());
        }
      }
    }
  }
  if (out.passed) out.detail << checked << " integrands vanish";
}

void fixed_point_counts(const Options&, Outcome& out) {
  for (int m = 0; m <= kCountMaxM; ++m) {
    const std::size_t enumerated = enumerate_fixed_points(m).size();
    const std::uint64_t expected = oracle::fixed_point_count(m);
    out.detail << enumerated << (m < kCountMaxM ? "," : "");
    if (enumerated != expected) {
      out.fail("m = " + std::to_string(m) + ": enumerated " + std::to_string(enumerated) +
               ", series " + std::to_string(expected));
    }
  }
}

void barth_witness(const Options& options, Outcome& out) {
  int checked = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int s = 0; s < kWitnessSeeds; ++s) {
      const std::uint64_t seed = derive_seed(options.seed, 100 * n + s);
      const PlaneConfiguration config = sample_configuration(n, seed);
      const HulsbergenDatum datum{config, sample_extension(n, seed)};
      const PlaneCurve curve = barth_curve(datum);
      const std::string where = " (n = " + std::to_string(n) + ", sample " + std::to_string(s) + ")";
      if (curve.degree != n || curve.is_zero()) out.fail("curve not of degree n" + where);
      if (!verify_darboux(config, curve)) out.fail("curve misses a node" + where);
      const int dimension = darboux_system_dimension(config);
      if (dimension != n) {
        out.fail("linear system has dimension " + std::to_string(dimension) + where);
      }
      ++checked;
    }
  }
  if (out.passed) out.detail << checked << " data, all incident, all systems of dimension n";
}

void parallel_determinism(const Options& options, Outcome& out) {
  const auto serial = integrate(7, {0, 14}, config_for(options, 1));
  const auto parallel = integrate(7, {0, 14}, config_for(options, options.parallel_threads));
  out.detail << "1 thread: " << serial.value << ", " << options.parallel_threads
             << " threads: " << parallel.value;
  if (serial.value.get_str() != parallel.value.get_str()) out.fail("results differ");
}

struct Criterion {
  int id;
  const char* name;
  void (*check)(const Options&, Outcome&);
};

constexpr std::array<Criterion, 8> kCriteria{{
    {1, "published-integers", published_integers},
    {2, "raw-q17-q21-integrals", raw_q17_q21_integrals},
    {3, "donaldson-darboux-identity", donaldson_darboux_identity},
    {4, "specialization-independence", specialization_independence},
    {5, "vanishing", vanishing},
    {6, "fixed-point-counts", fixed_point_counts},
    {7, "barth-witness", barth_witness},
    {8, "parallel-determinism", parallel_determinism},
}};

}  // namespace

std::vector<CriterionResult> run_all(const Options& options,
                                     const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> results;
  for (const Criterion& criterion : kCriteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.check(options, outcome);
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    CriterionResult result{criterion.id, criterion.name, outcome.passed, outcome.detail.str(),
                           std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count()};
    if (on_result) on_result(result);
    results.push_back(std::move(result));
  }
  return results;
}

std::string format_line(const CriterionResult& result) {
  std::ostringstream line;
  line << (result.passed ? "[PASS] " : "[FAIL] ") << result.id << " " << result.name << " ("
       << static_cast<long long>(result.elapsed_ms) << " ms): " << result.detail;
  return line.str();
}

}  // namespace hilb::acceptance
