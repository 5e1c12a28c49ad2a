#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hilb {

// Arbitrary-precision rational, always kept in canonical (reduced) form.
// This is the only numeric type used for integrals and witnesses.
using ExactRational = mpq_class;
using BigInt = mpz_class;

inline ExactRational make_rational(std::int64_t value) {
  ExactRational r;
  mpz_set_si(r.get_num_mpz_t(), static_cast<long>(value));
  return r;
}

inline bool is_integer(const ExactRational& r) { return r.get_den() == 1; }

inline std::string numerator_string(const ExactRational& r) {
  return r.get_num().get_str();
}

inline std::string denominator_string(const ExactRational& r) {
  return r.get_den().get_str();
}

inline std::string to_string(const ExactRational& r) { return r.get_str(); }

}  // namespace hilb
