#ifndef IBSIM_RNG_HPP
#define IBSIM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace ibsim {

/// Deterministic random source. The engine is std::mt19937_64 (whose output
/// sequence is fixed by the standard) and the uniform/normal transforms are
/// implemented here rather than taken from <random>, so a given seed yields
/// the same stream on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on (0, 1]; safe as a log() argument.
  double uniform_open() { return 1.0 - uniform(); }

  /// Standard normal via the Marsaglia polar method.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Derives the seed of substream `stream` from a master seed, so independent
/// chains / scan cells / multi-starts can be launched in any order and still
/// reproduce bit-identically.
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace ibsim

#endif
