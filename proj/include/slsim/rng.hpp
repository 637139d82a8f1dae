#pragma once
// Deterministic random streams. Everything random in the simulator flows
// through Rng, which wraps std::mt19937_64 (fully specified by the standard)
// with hand-rolled conversions, so results are bit-identical across platforms
// and standard libraries.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace slsim {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Child seed from a base seed and a path of indices. Distinct paths give
// independent streams: (seed, {cell, rep}) keys a sweep run, (seed, {tag, id})
// keys a per-agent stream inside a run.
inline std::uint64_t derive_seed(std::uint64_t base,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = mix64(base);
  for (std::uint64_t v : path) {
    h ^= mix64(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h = mix64(h);
  }
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform double on the open interval (0,1). Never returns 0 or 1, so
  // comparisons against probability-0 / probability-1 thresholds are exact.
  double uniform_open01() {
    return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Unbiased integer in [0, n).
  std::uint64_t uniform_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_below: n must be positive");
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t x = eng_();
      if (x >= threshold) return x % n;
    }
  }

  // Box-Muller; the spare draw is cached.
  double normal(double mu, double sigma) {
    if (sigma < 0.0) throw std::invalid_argument("normal: sigma must be non-negative");
    if (has_spare_) {
      has_spare_ = false;
      return mu + sigma * spare_;
    }
    const double u1 = uniform_open01();
    const double u2 = uniform_open01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return mu + sigma * radius * std::cos(angle);
  }

  // Normal draw rejected until it lands in [lo, hi]; preserves the requested
  // mean/std better than clamping. sigma == 0 degenerates to the clamped mean.
  double trunc_normal(double mu, double sigma, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("trunc_normal: empty interval");
    if (sigma == 0.0) return std::clamp(mu, lo, hi);
    for (int tries = 0; tries < 100000; ++tries) {
      const double x = normal(mu, sigma);
      if (x >= lo && x <= hi) return x;
    }
    throw std::runtime_error("trunc_normal: rejection sampling did not converge");
  }

  // Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace slsim
