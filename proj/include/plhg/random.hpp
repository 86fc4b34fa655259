#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace plhg {

/// Explicit random stream. Every sampling routine takes one of these by
/// reference; nothing in the library owns hidden RNG state.
///
/// Uniforms are built from the raw 64-bit engine output rather than through
/// std::uniform_real_distribution, whose algorithm differs between standard
/// libraries. This keeps draws bit-identical across toolchains.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on (0, 1] with 53 bits of resolution.
  double uniform() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Derives a child seed from a master seed and a sequence of indices.
/// h0 = splitmix64(master); h_{k+1} = splitmix64(h_k ^ splitmix64(i_k + 1)).
/// Pure function, so parallel schedules cannot change which stream a
/// replication receives.
std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> indices);

/// Separate streams for the weights and the edges of one model draw, so a
/// hypergraph can be redrawn from saved weights and the seed.
inline RandomStream weight_stream(std::uint64_t seed) {
  return RandomStream(derive_seed(seed, {0}));
}
inline RandomStream edge_stream(std::uint64_t seed) {
  return RandomStream(derive_seed(seed, {1}));
}

}  // namespace plhg
