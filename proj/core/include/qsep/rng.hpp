#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>

namespace qsep {

/// Deterministic counter-based generator (SplitMix64 core). Every random
/// quantity in the library flows from an explicit seed through this type;
/// no ambient entropy. Streams derived with split() are independent and
/// stable regardless of how much the parent has been consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), counter_(0) {}

  std::uint64_t next_u64() { return mix(seed_ + (++counter_) * kGamma); }

  /// Uniform double in [0, 1), 53 usable bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (fully specified, portable).
  double gaussian() {
    if (spare_) {
      double v = *spare_;
      spare_.reset();
      return v;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    return r * std::cos(theta);
  }

  /// Complex standard normal: independent N(0,1) real and imaginary parts.
  std::complex<double> complex_gaussian() {
    double re = gaussian();
    double im = gaussian();
    return {re, im};
  }

  /// Child stream keyed by `stream`; derived from the construction seed only.
  Rng split(std::uint64_t stream) const {
    return Rng(mix(seed_ ^ mix(stream * kGamma + 0x632be59bd9b4e019ULL)));
  }

  std::uint64_t seed() const { return seed_; }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t counter_;
  std::optional<double> spare_;
};

}  // namespace qsep
