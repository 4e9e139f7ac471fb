#ifndef PROLAB_RNG_HPP
#define PROLAB_RNG_HPP

#include <cstdint>

#include "prolab/rational.hpp"

namespace prolab {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a;
  std::uint64_t h = splitmix64(s);
  s = h ^ (b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
  return splitmix64(s);
}

/// Deterministic generator, identical across platforms (no std::
/// distributions). Used for all "seeded random" data in the suite.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return splitmix64(state_); }

  /// Uniform in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform integer in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Small integer scalar in [-bound, bound].
  Rational small_int(long bound = 9) { return Rational(range(-bound, bound)); }

  /// Small nonzero integer scalar.
  Rational small_nonzero(long bound = 9) {
    for (;;) {
      Rational r = small_int(bound);
      if (!r.is_zero()) return r;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace prolab

#endif  // PROLAB_RNG_HPP
