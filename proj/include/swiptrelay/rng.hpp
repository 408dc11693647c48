#ifndef SWIPTRELAY_RNG_HPP
#define SWIPTRELAY_RNG_HPP

#include <cmath>
#include <cstdint>
#include <limits>

namespace swiptrelay {

// Counter-based generator: output i of a stream is a fixed 64-bit mix of
// (key, i), so draws can be produced in any order (or in parallel) and the
// sequence is identical on every platform. The mix is the SplitMix64
// finalizer over key + i*golden.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream_id)
      : key_(mix(mix(seed + 0x9E3779B97F4A7C15ULL) ^
                 mix(stream_id + 0x8E405D5B8F3C9F15ULL))) {}

  std::uint64_t next_u64() { return at(counter_++); }

  // value at an absolute position, independent of generator state
  std::uint64_t at(std::uint64_t i) const {
    return mix(key_ + 0x9E3779B97F4A7C15ULL * (i + 1));
  }

  // uniform on [0,1) with 53 random bits
  double uniform01() { return to_unit(next_u64()); }
  double uniform01_at(std::uint64_t i) const { return to_unit(at(i)); }

  // inverse-CDF exponential with the given rate; rate 0 and +inf give the
  // degenerate limits +inf and 0
  double exponential(double rate) { return exp_from_unit(uniform01(), rate); }
  double exponential_at(std::uint64_t i, double rate) const {
    return exp_from_unit(uniform01_at(i), rate);
  }

  static double exp_from_unit(double u, double rate) {
    if (rate == 0.0) return std::numeric_limits<double>::infinity();
    if (std::isinf(rate)) return 0.0;
    return -std::log1p(-u) / rate;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  static double to_unit(std::uint64_t z) {
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace swiptrelay

#endif
