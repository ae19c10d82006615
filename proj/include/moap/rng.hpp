#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace moap {

// Seeded random source used by all solvers and generators. Wraps the
// standardized mt19937_64 engine so sequences are identical on every
// platform; bounded draws and shuffling are implemented here because the
// standard library leaves <random> distributions and std::shuffle
// implementation-defined.
//
// Independent streams are derived with fork(): entity k gets its own
// generator seeded from (seed, tag, k), so e.g. adding a demand never
// perturbs the draws of earlier demands.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : Rng(mix(seed), Raw{}) {}

  Rng fork(std::uint64_t tag) const {
    return Rng(mix(seed_material_ ^ mix(tag)), Raw{});
  }
  Rng fork(std::string_view name, std::uint64_t k = 0) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ull;
    return fork(h ^ mix(k + 0x9e3779b97f4a7c15ull));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [lo, hi], inclusive. Rejection sampling, no modulo bias.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next_u64());  // full range
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
  }

  // Uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  bool bernoulli(double p) { return uniform01() < p; }

  // Triangular distribution on [lo, hi] with the given peak.
  double triangular(double lo, double peak, double hi) {
    const double u = uniform01();
    const double fc = (peak - lo) / (hi - lo);
    if (u < fc) return lo + std::sqrt(u * (hi - lo) * (peak - lo));
    return hi - std::sqrt((1.0 - u) * (hi - lo) * (hi - peak));
  }

  // Index draw from non-negative weights (sum > 0).
  std::size_t weighted_index(const std::vector<double>& weights) {
    double total = 0;
    for (double w : weights) total += w;
    double x = uniform01() * total;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      x -= weights[i];
      if (x < 0) return i;
    }
    return weights.empty() ? 0 : weights.size() - 1;
  }

  // Fisher-Yates; deterministic replacement for std::shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct values out of {0, ..., n-1}, in draw order.
  std::vector<int> sample_without_replacement(int n, int k) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k && i < n; ++i) {
      const auto j = static_cast<std::size_t>(uniform_int(i, n - 1));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
      out.push_back(pool[static_cast<std::size_t>(i)]);
    }
    return out;
  }

  // splitmix64 finalizer; also used standalone for hashing.
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

 private:
  struct Raw {};
  Rng(std::uint64_t mixed, Raw) : engine_(mixed), seed_material_(mixed) {}

  std::mt19937_64 engine_;
  std::uint64_t seed_material_ = 0;
};

}  // namespace moap
