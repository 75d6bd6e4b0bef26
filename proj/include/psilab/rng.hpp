#pragma once

#include <array>
#include <cstdint>

namespace psi {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
// Stateless block function: 128-bit counter + 64-bit key -> 128 random bits.
std::array<uint32_t, 4> philox4x32(const std::array<uint32_t, 4>& counter,
                                   const std::array<uint32_t, 2>& key);

// One independent random stream, addressed by (seed, stream id, substream id).
// Streams derived from the same seed but different ids never overlap, so
// per-pixel sampling is reproducible regardless of evaluation order.
class philox_stream {
 public:
  philox_stream(uint64_t seed, uint64_t stream, uint32_t substream = 0);

  uint32_t next_u32();
  uint64_t next_u64();
  double next_double();  // uniform in [0, 1), 53-bit resolution
  bool next_bernoulli(double p);

  // Binomial draw with trial count n and success probability p.
  // Exact inversion started at the distribution mode; consumes one uniform.
  long long next_binomial(long long n, double p);

 private:
  std::array<uint32_t, 2> key_;
  std::array<uint32_t, 4> counter_;
  std::array<uint32_t, 4> block_{};
  int block_pos_ = 4;  // empty
};

// Derives a child seed for trial/worker i from a master seed.
uint64_t derive_seed(uint64_t master_seed, uint64_t index);

}  // namespace psi
