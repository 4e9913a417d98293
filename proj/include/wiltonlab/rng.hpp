#pragma once

#include <array>
#include <cstdint>

namespace wiltonlab {

// Philox 4x32-10 counter-based generator (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3", SC'11). Counter-based streams let every Monte
// Carlo sample own its variates by index, so estimates are bit-identical for
// any thread count or scheduling order. Known-answer vectors are pinned in
// the test suite.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key);

// Variate stream for one (seed, sample_index, stream_tag) triple.
class sample_rng {
 public:
  sample_rng(std::uint64_t seed, std::uint64_t sample_index,
             std::uint32_t stream_tag = 0);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // uniform on the open interval (0,1); safe to pass to log()
  double next_unit();

  // uniform dyadic numerator in [1, 2^width - 1]; width in [1, 64]
  std::uint64_t next_dyadic_bits(int width);

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> base_;
  std::array<std::uint32_t, 4> buf_{};
  std::uint32_t block_ = 0;
  int pos_ = 4;
};

}  // namespace wiltonlab
