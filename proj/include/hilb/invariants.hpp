#pragma once

#include <vector>

#include "hilb/exact_rational.hpp"
#include "hilb/localization.hpp"

namespace hilb {

// Donaldson coefficient q_{4n-3} of CP^2, 2 <= n <= 6.
//   n <= 5:  q = 2^{n-5} * int_{H_{n+1}} c1(L)^{5-n} s_{3n-3}(E (x) L)
//   n == 6:  q = 2/5     * int_{H_7} s_14(E (x) L)
struct DonaldsonResult {
  int n = 0;
  ExactRational q;
  ExactRational raw_integral;
  ExactRational prefactor;
  IntegralResult integral;
};

// Compactified count of Darboux configurations (Pi, C) for degree-n curves:
// Pi through i given points, C through 3n + 2 - i given points.
struct DarbouxCount {
  int n = 0;
  int i = 0;
  ExactRational count;
  IntegralResult integral;
  // n <= 6 lies within the range covered by the published values.
  bool validated_range = true;
};

struct InvariantTable {
  std::vector<DonaldsonResult> donaldson;
  std::vector<DarbouxCount> darboux;
};

inline constexpr int kMinDonaldsonN = 2;
inline constexpr int kMaxDonaldsonN = 6;

IntegrandSpec donaldson_integrand(int n);
ExactRational donaldson_prefactor(int n);

// Throws OutOfRange outside [2, 6] and IntegralityViolation if either the raw
// integral or q fails to be an integer.
DonaldsonResult donaldson_q(int n, const IntegrationConfig& config = {});

// Throws OutOfRange unless n >= 2 and 0 <= i <= 2n + 2.
DarbouxCount darboux_count(int n, int i, const IntegrationConfig& config = {});

// Donaldson rows for 2..n_max and Darboux rows for every (n, i) with
// 2 <= n <= n_max.
InvariantTable invariant_table(int n_max, const IntegrationConfig& config = {});

}  // namespace hilb
