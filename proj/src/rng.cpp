#include "rng.hpp"

namespace ibsim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t substream_seed(std::uint64_t master, std::uint64_t stream) {
  // Two mixing rounds decorrelate adjacent (master, stream) pairs.
  return splitmix64(splitmix64(master) ^ (0xD2B74407B1CE6E93ULL * (stream + 1)));
}

}  // namespace ibsim
