#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bound_bridge {

// SplitMix64 (Steele, Lea, Flood 2014; Vigna's fixed-increment variant).
// 64-bit state, one mixing round per output. Passes BigCrush and is trivially
// seedable, which is all the simulation engine needs.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += UINT64_C(0x9E3779B97F4A7C15));
    z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Stream for replication `index`, derived purely from (master_seed, index) so
// results do not depend on the order replications are executed in.
inline SplitMix64 replication_stream(std::uint64_t master_seed, std::uint64_t index) {
  SplitMix64 lane(master_seed + index * UINT64_C(0x9E3779B97F4A7C15));
  return SplitMix64(lane.next());
}

// Cumulative weights for inverse-CDF sampling of a finite distribution.
inline std::vector<double> cumulative_weights(const std::vector<double>& probs) {
  std::vector<double> cum(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cum[i] = acc;
  }
  return cum;
}

inline std::size_t sample_index(const std::vector<double>& cum, double u) {
  if (cum.empty()) throw std::invalid_argument("sample_index: empty distribution");
  auto it = std::upper_bound(cum.begin(), cum.end(), u);
  std::size_t idx = static_cast<std::size_t>(it - cum.begin());
  return std::min(idx, cum.size() - 1);
}

}  // namespace bound_bridge
