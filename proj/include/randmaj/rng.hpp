#pragma once

// Counter-based random streams.
//
// A stream is addressed by (master_seed, stream_index). Its n-th 64-bit word
// is a pure function of (master_seed, stream_index, n), computed with the
// Philox4x32-10 bijection: the key is the master seed, the 128-bit counter is
// (word block, stream index). Distinct streams therefore never overlap and
// any stream can be regenerated bit-for-bit on any platform.

#include <array>
#include <cstdint>
#include <limits>

namespace randmaj {

/// Philox4x32 with 10 rounds.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
      : master_seed_(master_seed), stream_index_(stream_index) {}

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  /// Stream with the same seed and index + offset.
  RngStream offset(std::uint64_t offset) const {
    return RngStream(master_seed_, stream_index_ + offset);
  }

  /// Stream positioned at the start of window w: the same (seed, index) but
  /// with the block counter starting at w * 2^32. Consumers that draw a
  /// variable number of words per item use one window per item, so item i
  /// always sees the same words regardless of what earlier items consumed.
  RngStream window(std::uint64_t w) const {
    RngStream s(master_seed_, stream_index_);
    s.block_ = w << 32;
    return s;
  }

  std::uint64_t next_u64();

  /// Uniform on the open interval (0, 1) with 53-bit resolution:
  /// (m + 1/2) * 2^-53 for a 53-bit integer m.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  result_type operator()() { return next_u64(); }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  unsigned buffered_ = 0;
};

}  // namespace randmaj
