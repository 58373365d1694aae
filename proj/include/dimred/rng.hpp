#ifndef DIMRED_RNG_HPP
#define DIMRED_RNG_HPP

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace dimred {

/// SplitMix64 generator (Steele, Lea & Flood 2014). Chosen because the full
/// state transition fits in three lines and is trivially reproduced in any
/// language, which keeps seeded datasets portable across implementations:
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// Derived draws are fixed too: uniform01() maps the top 53 bits to [0,1);
/// normal() consumes exactly two raw draws via Box-Muller (cosine branch);
/// bounded(n) maps one raw draw by 128-bit multiply-shift.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller. u1 is shifted into (0,1] so log() is safe.
  double normal() {
    double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    double u2 = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  /// Uniform integer in [0, n). Multiply-shift map of one raw draw.
  std::uint64_t bounded(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * static_cast<unsigned __int128>(n)) >> 64);
  }

  /// Fisher-Yates, high index down.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(bounded(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

/// FNV-1a hash of a tag string, used to derive stage-specific sub-seeds.
inline std::uint64_t hash_tag(std::string_view tag) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : tag) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

/// Deterministic sub-seed for (seed, stage tag, index). All pipeline stages
/// draw their seeds through this so one global seed pins the whole run.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag,
                                 std::uint64_t index = 0) {
  SplitMix64 mix(seed ^ hash_tag(tag) ^ (index * 0x9E3779B97F4A7C15ULL));
  return mix.next();
}

}  // namespace dimred

#endif  // DIMRED_RNG_HPP
