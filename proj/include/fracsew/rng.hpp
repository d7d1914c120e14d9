#pragma once

#include <cstdint>
#include <random>

namespace fracsew {

/// splitmix64 step; used both as a PRNG seeder and as the splittable
/// stream-derivation hash so that substream identities are stable.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derive a child seed from (seed, stream, index). Changing the index does not
/// reshuffle other streams, so e.g. raising a truncation level keeps all
/// previously drawn modes identical.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0) {
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s);
  s = a ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
  std::uint64_t b = splitmix64(s);
  s = b ^ (0xbf58476d1ce4e5b9ULL * (index + 1));
  return splitmix64(s);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double normal() { return normal_(gen_); }
  double uniform() { return uni_(gen_); }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uni_{0.0, 1.0};
};

}  // namespace fracsew
