#ifndef SSM_RNG_HPP
#define SSM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

namespace ssm {

// splitmix64 finalizer; used both as a bit mixer and for seed derivation.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Substream seed for worker / replicate `stream` under a master seed.
// Counter-splitting keeps parallel Monte Carlo independent of the worker
// count: stream ids are indexed by the work item, not by the thread.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t stream) {
  return mix64(master ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

inline std::uint64_t hash_key(const std::string& key) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// A seeded random stream. Distribution draws are hand-rolled on top of the
// raw 64-bit output so a stream consumes a fixed, documented number of
// variates per call and sequences stay reproducible across standard library
// versions.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(mix64(seed)) {}

  static RngStream substream(std::uint64_t master, std::uint64_t stream) {
    return RngStream(substream_seed(master, stream));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0,1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0,1]; safe as a log() argument.
  double uniform01_open_left() { return 1.0 - uniform01(); }

  // Box-Muller, two uniforms consumed per call, no cached spare.
  double normal(double mean = 0.0, double sd = 1.0) {
    const double u1 = uniform01_open_left();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sd * r * std::cos(6.283185307179586476925286766559 * u2);
  }

  // Beta(1, theta) by inversion: 1 - U^(1/theta).
  double beta_one(double theta) {
    return 1.0 - std::pow(uniform01_open_left(), 1.0 / theta);
  }

  // Index in [0, weights.size()) proportional to nonnegative weights summing
  // to `total`. Returns size() when the uniform lands in [sum, total), which
  // callers use as the residual/tail slot.
  template <typename Vec>
  std::size_t discrete(const Vec& weights, double total) {
    double u = uniform01() * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      u -= weights[i];
      if (u < 0.0) return i;
    }
    return weights.size();
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ssm

#endif  // SSM_RNG_HPP
