#include "psilab/rng.hpp"

#include <cmath>

namespace psi {

namespace {

constexpr uint32_t kMult0 = 0xD2511F53u;
constexpr uint32_t kMult1 = 0xCD9E8D57u;
constexpr uint32_t kWeyl0 = 0x9E3779B9u;
constexpr uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(uint32_t a, uint32_t b, uint32_t& hi, uint32_t& lo) {
  uint64_t p = static_cast<uint64_t>(a) * b;
  hi = static_cast<uint32_t>(p >> 32);
  lo = static_cast<uint32_t>(p);
}

}  // namespace

std::array<uint32_t, 4> philox4x32(const std::array<uint32_t, 4>& counter,
                                   const std::array<uint32_t, 2>& key) {
  std::array<uint32_t, 4> x = counter;
  uint32_t k0 = key[0], k1 = key[1];
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      k0 += kWeyl0;
      k1 += kWeyl1;
    }
    uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMult0, x[0], hi0, lo0);
    mulhilo(kMult1, x[2], hi1, lo1);
    x = {hi1 ^ x[1] ^ k0, lo1, hi0 ^ x[3] ^ k1, lo0};
  }
  return x;
}

philox_stream::philox_stream(uint64_t seed, uint64_t stream, uint32_t substream) {
  key_ = {static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)};
  counter_ = {0, static_cast<uint32_t>(stream), static_cast<uint32_t>(stream >> 32), substream};
}

uint32_t philox_stream::next_u32() {
  if (block_pos_ == 4) {
    block_ = philox4x32(counter_, key_);
    ++counter_[0];  // 2^32 blocks per stream; streams never collide
    block_pos_ = 0;
  }
  return block_[block_pos_++];
}

uint64_t philox_stream::next_u64() {
  uint64_t lo = next_u32();
  uint64_t hi = next_u32();
  return (hi << 32) | lo;
}

double philox_stream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool philox_stream::next_bernoulli(double p) { return next_double() < p; }

long long philox_stream::next_binomial(long long n, double p) {
  if (n <= 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;

  // Inversion of the CDF enumerated outward from the mode, so the pmf never
  // underflows for large n the way a walk from m = 0 would.
  const double q = 1.0 - p;
  const long long mode = static_cast<long long>(std::floor((n + 1) * p));
  const double log_pmf_mode = std::lgamma(n + 1.0) - std::lgamma(mode + 1.0) -
                              std::lgamma(n - mode + 1.0) +
                              mode * std::log(p) + (n - mode) * std::log(q);
  double u = next_double();

  double pmf_up = std::exp(log_pmf_mode);    // pmf at m = mode + ku
  double pmf_down = pmf_up;                  // pmf at m = mode - kd
  long long up = mode, down = mode;
  u -= pmf_up;
  if (u <= 0) return mode;
  while (true) {
    bool moved = false;
    if (up < n) {
      pmf_up *= (static_cast<double>(n - up) / (up + 1)) * (p / q);
      ++up;
      u -= pmf_up;
      if (u <= 0) return up;
      moved = true;
    }
    if (down > 0) {
      pmf_down *= (static_cast<double>(down) / (n - down + 1)) * (q / p);
      --down;
      u -= pmf_down;
      if (u <= 0) return down;
      moved = true;
    }
    if (!moved) return mode;  // u in the sub-2^-53 tail; clamp
  }
}

uint64_t derive_seed(uint64_t master_seed, uint64_t index) {
  philox_stream s(master_seed, index, 0xDEC0DEu);
  return s.next_u64();
}

}  // namespace psi
