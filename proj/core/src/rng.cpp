#include "lrccs/rng.hpp"

#include <cmath>

namespace lrccs {

double SplitMix64::next_gaussian() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_;
  }
  const double u1 = next_unit();  // (0,1], so log(u1) is finite
  const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  cached_ = radius * std::sin(angle);
  have_cached_ = true;
  return radius * std::cos(angle);
}

std::uint64_t domain_seed(std::uint64_t seed, std::uint64_t tag) {
  // One SplitMix64 step of (seed + tag * weyl) decorrelates nearby seeds/tags.
  SplitMix64 mixer(seed + tag * 0xD1B54A32D192ED03ULL);
  return mixer.next_u64();
}

}  // namespace lrccs
