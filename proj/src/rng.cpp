#include "wiltonlab/rng.hpp"

namespace wiltonlab {

namespace {

constexpr std::uint32_t kM0 = 0xD2511F53u;
constexpr std::uint32_t kM1 = 0xCD9E8D57u;
constexpr std::uint32_t kW0 = 0x9E3779B9u;  // golden-ratio Weyl constants
constexpr std::uint32_t kW1 = 0xBB67AE85u;

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t(kM0) * ctr[0];
    const std::uint64_t p1 = std::uint64_t(kM1) * ctr[2];
    ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0], std::uint32_t(p1),
           std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1], std::uint32_t(p0)};
    key[0] += kW0;
    key[1] += kW1;
  }
  return ctr;
}

sample_rng::sample_rng(std::uint64_t seed, std::uint64_t sample_index,
                       std::uint32_t stream_tag)
    : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)},
      base_{std::uint32_t(sample_index), std::uint32_t(sample_index >> 32),
            stream_tag, 0} {}

void sample_rng::refill() {
  base_[3] = block_++;
  buf_ = philox4x32(base_, key_);
  pos_ = 0;
}

std::uint32_t sample_rng::next_u32() {
  if (pos_ >= 4) refill();
  return buf_[pos_++];
}

std::uint64_t sample_rng::next_u64() {
  const std::uint64_t hi = next_u32();
  return (hi << 32) | next_u32();
}

double sample_rng::next_unit() {
  // 53-bit mantissa, offset by half an ulp so 0 is never produced
  return (double(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t sample_rng::next_dyadic_bits(int width) {
  std::uint64_t bits = next_u64();
  if (width < 64) bits >>= (64 - width);
  if (bits == 0) bits = 1;  // skip the measure-zero endpoint x = 0
  return bits;
}

}  // namespace wiltonlab
