#pragma once

// Counter-based random numbers. Every draw is a pure function of
// (master seed, counter), so samples can be generated in any order and on any
// thread without changing the result.

#include <array>
#include <cmath>
#include <cstdint>

namespace edgelab {

/// Philox4x32-10 block cipher (Salmon et al., SC'11).
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  explicit constexpr Philox4x32(std::uint64_t seed) noexcept
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

  constexpr Counter operator()(Counter ctr) const noexcept {
    Key key = key_;
    for (int round = 0; round < 10; ++round) {
      ctr = single_round(ctr, key);
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static constexpr Counter single_round(const Counter& c, const Key& k) noexcept {
    const std::uint64_t p0 = std::uint64_t{kMul0} * c[0];
    const std::uint64_t p1 = std::uint64_t{kMul1} * c[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
  }

  Key key_;
};

/// Two uniforms on [0, 1) with 53-bit resolution.
struct UniformPair {
  double first;
  double second;
};

inline double bits_to_unit(std::uint32_t hi, std::uint32_t lo) noexcept {
  const std::uint64_t mantissa = (std::uint64_t{hi >> 5} << 26) | (lo >> 6);
  return static_cast<double>(mantissa) * 0x1.0p-53;
}

/// Addressable stream: one Philox block per (sample, stream, i, j) cell.
class CellRng {
 public:
  CellRng(std::uint64_t master_seed, std::uint64_t sample_index, std::uint32_t stream) noexcept
      : cipher_(master_seed),
        sample_lo_(static_cast<std::uint32_t>(sample_index)),
        // upper sample bits are folded into the stream word
        stream_(stream ^ (static_cast<std::uint32_t>(sample_index >> 32) * 0x85EBCA6Bu)) {}

  UniformPair uniforms(std::uint32_t i, std::uint32_t j) const noexcept {
    const auto out = cipher_({sample_lo_, stream_, i, j});
    return {bits_to_unit(out[0], out[1]), bits_to_unit(out[2], out[3])};
  }

 private:
  Philox4x32 cipher_;
  std::uint32_t sample_lo_;
  std::uint32_t stream_;
};

/// Sequential generator over a counter-based stream, satisfying
/// UniformRandomBitGenerator for use with <random> and shuffles.
class CounterEngine {
 public:
  using result_type = std::uint32_t;

  CounterEngine(std::uint64_t seed, std::uint64_t stream) noexcept
      : cipher_(seed),
        stream_lo_(static_cast<std::uint32_t>(stream)),
        stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return 0xFFFFFFFFu; }

  result_type operator()() noexcept {
    if (pos_ == 4) {
      block_ = cipher_({static_cast<std::uint32_t>(counter_), static_cast<std::uint32_t>(counter_ >> 32),
                        stream_lo_, stream_hi_});
      ++counter_;
      pos_ = 0;
    }
    return block_[pos_++];
  }

  double uniform() noexcept {
    const auto hi = (*this)();
    const auto lo = (*this)();
    return bits_to_unit(hi, lo);
  }

  /// Standard normal by Box-Muller (one of the pair is discarded).
  double normal() noexcept {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  Philox4x32 cipher_;
  std::uint32_t stream_lo_;
  std::uint32_t stream_hi_;
  std::uint64_t counter_ = 0;
  Philox4x32::Counter block_{};
  int pos_ = 4;
};

}  // namespace edgelab
