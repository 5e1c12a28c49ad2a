#include "hilb/invariants.hpp"

#include <string>

#include "hilb/errors.hpp"

namespace hilb {

namespace {

void require_integer(const ExactRational& value, const std::string& what) {
  if (!is_integer(value)) {
    throw IntegralityViolation(what + " is not an integer: " + to_string(value));
  }
}

void require_donaldson_range(int n) {
  if (n < kMinDonaldsonN || n > kMaxDonaldsonN) {
    throw OutOfRange("donaldson_q is defined for 2 <= n <= 6, got n = " + std::to_string(n));
  }
}

}  // namespace

IntegrandSpec donaldson_integrand(int n) {
  require_donaldson_range(n);
  if (n == 6) return {0, 14};
  return {5 - n, 3 * n - 3};
}

ExactRational donaldson_prefactor(int n) {
  require_donaldson_range(n);
  // The n = 6 constant comes from the divisor relation on M_6 and does not
  // extend to other n.
  if (n == 6) return ExactRational(2, 5);
  return ExactRational(1, 1u << (5 - n));
}

DonaldsonResult donaldson_q(int n, const IntegrationConfig& config) {
  const IntegrandSpec integrand = donaldson_integrand(n);
  DonaldsonResult result;
  result.n = n;
  result.prefactor = donaldson_prefactor(n);
  result.integral = integrate(n + 1, integrand, config);
  result.raw_integral = result.integral.value;
  require_integer(result.raw_integral, "integral for q_" + std::to_string(4 * n - 3));
  result.q = result.prefactor * result.raw_integral;
  require_integer(result.q, "q_" + std::to_string(4 * n - 3));
  return result;
}

DarbouxCount darboux_count(int n, int i, const IntegrationConfig& config) {
  if (n < 2) throw OutOfRange("darboux_count requires n >= 2, got n = " + std::to_string(n));
  if (i < 0 || i > 2 * n + 2) {
    throw OutOfRange("darboux_count requires 0 <= i <= 2n + 2 = " + std::to_string(2 * n + 2) +
                     ", got i = " + std::to_string(i));
  }
  DarbouxCount result;
  result.n = n;
  result.i = i;
  result.integral = integrate(n + 1, {i, 2 * n + 2 - i}, config);
  result.count = result.integral.value;
  result.validated_range = n <= kMaxDonaldsonN;
  require_integer(result.count, "Darboux count (n = " + std::to_string(n) +
                                    ", i = " + std::to_string(i) + ")");
  return result;
}

InvariantTable invariant_table(int n_max, const IntegrationConfig& config) {
  require_donaldson_range(n_max);
  InvariantTable table;
  for (int n = kMinDonaldsonN; n <= n_max; ++n) table.donaldson.push_back(donaldson_q(n, config));
  for (int n = kMinDonaldsonN; n <= n_max; ++n) {
    for (int i = 0; i <= 2 * n + 2; ++i) table.darboux.push_back(darboux_count(n, i, config));
  }
  return table;
}

}  // namespace hilb
