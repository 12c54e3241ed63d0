#pragma once

// Pinned random stream shared by the generator and the GA.
//
// Engine: std::mt19937_64 (its output sequence is fixed by the C++
// standard). Standard distributions are implementation-defined, so the
// integer and real draws below are spelled out:
//   uniform_int(lo, hi): rejection sampling on the raw 64-bit output,
//     accepting x < limit where limit = 2^64 - (2^64 mod span), result
//     lo + x mod span.
//   uniform01(): (x >> 11) * 2^-53, in [0, 1).

#include <cstdint>
#include <random>
#include <string_view>

namespace confsched {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer on the closed range [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform index in [0, count).
  int index(int count) { return static_cast<int>(uniform_int(0, count - 1)); }
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform01() < p; }
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finaliser; used to derive independent stream seeds.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t combine_seed(std::uint64_t seed, std::uint64_t value);
/// FNV-1a of a label folded into a seed.
std::uint64_t combine_seed(std::uint64_t seed, std::string_view label);

}  // namespace confsched
