#ifndef IDENS_RNG_HPP
#define IDENS_RNG_HPP

#include <cstdint>

namespace idens {

// Deterministic splitmix64 generator. Suites derive per-shard streams from
// the master seed so that reports are byte-identical across reruns and
// worker counts.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  static Rng for_shard(std::uint64_t master_seed, std::uint64_t shard) {
    Rng mix(master_seed ^ (0xd1b54a32d192ed03ULL * (shard + 1)));
    mix.next();
    return mix;
  }
};

}  // namespace idens

#endif
