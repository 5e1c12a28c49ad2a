#pragma once

#include <cstdint>
#include <random>

namespace hilb {

// Seeded integer stream whose output is identical on every platform.
// std::uniform_int_distribution is implementation-defined, so bounded draws
// are done here by rejection on the raw mt19937_64 output.
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

// Deterministic seed derivation (splitmix64 finalizer over seed + index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace hilb
