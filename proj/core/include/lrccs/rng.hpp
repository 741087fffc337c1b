#ifndef LRCCS_RNG_HPP
#define LRCCS_RNG_HPP

#include <cstdint>

namespace lrccs {

/// Counter-based PRNG (SplitMix64). State advances by a fixed odd increment,
/// so skipping ahead and deriving disjoint substreams are both cheap, and the
/// same seed always reproduces the same sequence regardless of call order
/// elsewhere in the program.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in (0, 1].
  double next_unit() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; generates pairs and caches the second.
  double next_gaussian();

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

/// Mixes a raw seed with a domain tag so that distinct uses of the same user
/// seed (basis generation, coefficient columns, design matrices) never share
/// a stream.
std::uint64_t domain_seed(std::uint64_t seed, std::uint64_t tag);

/// Per-column substream: column k of a given domain draws from domain ^ k,
/// which makes q-parallel generation order-independent.
inline SplitMix64 column_stream(std::uint64_t domain, std::uint64_t k) {
  return SplitMix64(domain ^ k);
}

namespace rng_tag {
inline constexpr std::uint64_t kGroundTruthBasis = 1;
inline constexpr std::uint64_t kGroundTruthCoeffs = 2;
inline constexpr std::uint64_t kDesign = 3;
}  // namespace rng_tag

}  // namespace lrccs

#endif  // LRCCS_RNG_HPP
