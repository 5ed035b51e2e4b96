#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "geosynth/error.hpp"

namespace geosynth {

// Counter-based splittable generator (splitmix64 finalizer). Every sampling
// decision in the pipeline goes through this type so that a (seed, stream)
// pair reproduces the same corpus regardless of platform or worker count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(mix(seed ^ 0x9e3779b97f4a7c15ULL)) {}

  // Derived stream: workers use for_stream(seed, figure_index) so that a
  // parallel run reproduces the sequential corpus.
  static Rng for_stream(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed);
    r.state_ = mix(r.state_ + mix(stream + 0x6a09e667f3bcc909ULL));
    return r;
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Inclusive bounds.
  int uniform_int(int lo, int hi) {
    if (hi < lo) throw Error(ErrorCode::invalid_config, "uniform_int: empty range");
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  // Uniform on the grid {lo, lo+step, ..., <= hi}.
  double uniform_grid(double lo, double hi, double step) {
    int cells = static_cast<int>((hi - lo) / step + 0.5);
    return lo + step * uniform_int(0, cells);
  }

  bool chance(double p) { return uniform() < p; }

  std::size_t pick_weighted(std::span<const double> weights) {
    double total = 0;
    for (double w : weights) total += w;
    if (total <= 0) throw Error(ErrorCode::invalid_config, "pick_weighted: weights sum to zero");
    double x = uniform() * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      x -= weights[i];
      if (x < 0) return i;
    }
    return weights.size() - 1;
  }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    if (items.empty()) throw Error(ErrorCode::invalid_config, "pick: empty set");
    return items[static_cast<std::size_t>(next_u64() % items.size())];
  }

  // First k elements of a random permutation of [0, n).
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    if (k > n) k = n;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = i + static_cast<std::size_t>(next_u64() % (n - i));
      std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
};

}  // namespace geosynth
