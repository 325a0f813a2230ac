#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "common/errors.hpp"

namespace cyclemix {

// Self-contained xoshiro256++ stream seeded through splitmix64. All project
// randomness flows through explicitly seeded Rng instances so that every run
// is reproducible bit-for-bit; no libstdc++ distribution objects are used
// (their output is implementation-defined).
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& word : state_) word = splitmix64(x);
    has_spare_normal_ = false;
  }

  // Derives an independent child stream, e.g. rng.child("val_split").
  Rng child(const std::string& tag) const {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : tag) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    for (uint64_t word : state_) {
      h ^= word;
      h *= 0x100000001b3ULL;
    }
    return Rng(h);
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n), unbiased via rejection.
  uint64_t uniform_index(uint64_t n) {
    if (n == 0) throw ValueError("uniform_index: n must be positive");
    const uint64_t limit = (~uint64_t{0}) - (~uint64_t{0}) % n;
    uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % n;
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Standard normal via Box-Muller with a cached spare.
  double normal() {
    if (has_spare_normal_) {
      has_spare_normal_ = false;
      return spare_normal_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    spare_normal_ = r * std::sin(theta);
    has_spare_normal_ = true;
    return r * std::cos(theta);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Gamma(shape, 1) via Marsaglia-Tsang; shape < 1 handled by boosting.
  double gamma(double shape) {
    if (shape <= 0.0) throw ValueError("gamma: shape must be positive");
    if (shape < 1.0) {
      const double u = uniform_positive();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = normal();
      double v = 1.0 + c * x;
      if (v <= 0.0) continue;
      v = v * v * v;
      const double u = uniform_positive();
      if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
    }
  }

  double beta(double a, double b) {
    const double x = gamma(a);
    const double y = gamma(b);
    return x / (x + y);
  }

  // Dirichlet(alpha, ..., alpha) over k components.
  std::vector<double> dirichlet(int k, double alpha) {
    if (k < 1) throw ValueError("dirichlet: k must be >= 1");
    if (alpha <= 0.0) throw ValueError("dirichlet: alpha must be positive");
    std::vector<double> draws(static_cast<size_t>(k));
    if (k == 1) {
      draws[0] = 1.0;
      return draws;
    }
    double total = 0.0;
    for (auto& d : draws) {
      d = gamma(alpha);
      total += d;
    }
    for (auto& d : draws) d /= total;
    return draws;
  }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(uniform_index(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  // m distinct indices drawn from [0, n) without replacement, in draw order.
  std::vector<size_t> sample_without_replacement(size_t n, size_t m) {
    if (m > n) throw ValueError("sample_without_replacement: m > n");
    std::vector<size_t> pool(n);
    for (size_t i = 0; i < n; ++i) pool[i] = i;
    for (size_t i = 0; i < m; ++i) {
      const size_t j = i + static_cast<size_t>(uniform_index(n - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(m);
    return pool;
  }

 private:
  double uniform_positive() {
    double u = uniform();
    while (u <= 0.0) u = uniform();
    return u;
  }

  static uint64_t splitmix64(uint64_t& x) {
    x += 0x9E3779B97f4A7C15ULL;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static uint64_t rotl(uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

  uint64_t state_[4];
  bool has_spare_normal_;
  double spare_normal_ = 0.0;
};

}  // namespace cyclemix
