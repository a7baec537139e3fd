#pragma once

#include <cstdint>
#include <limits>
#include <utility>

namespace lvnet {

/// splitmix64 step; used to expand a single seed into generator state.
std::uint64_t splitmix64(std::uint64_t& state);

/// xoshiro256++ (Blackman & Vigna). Satisfies UniformRandomBitGenerator.
class Xoshiro256pp {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256pp(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform();

 private:
  std::uint64_t s_[4];
};

/// Standard normal draws via Box-Muller on xoshiro256++ uniforms. Both
/// outputs of each transform are used, cosine branch first.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed);

  double next();

  /// u1 in (0, 1], u2 in [0, 1):
  /// (sqrt(-2 ln u1) cos(2 pi u2), sqrt(-2 ln u1) sin(2 pi u2)).
  static std::pair<double, double> box_muller(double u1, double u2);

 private:
  Xoshiro256pp engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace lvnet
