#pragma once

#include <concepts>
#include <cstdint>

namespace spvote {

// A source of fair coin tosses; true means heads.
template <class S>
concept CoinSource = requires(S& s) {
  { s.coin() } -> std::same_as<bool>;
};

// Coin tosses plus uniform draws from [0, bound).
template <class S>
concept RandomSource = CoinSource<S> && requires(S& s, std::uint64_t bound) {
  { s.below(bound) } -> std::same_as<std::uint64_t>;
};

inline constexpr std::uint64_t splitmix64_gamma = 0x9E3779B97F4A7C15ULL;

// splitmix64 output finalizer.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Deterministic splitmix64 generator. The whole stream is a function of the
/// seed, so runs are reproducible bit for bit in any language.
class RngState {
 public:
  constexpr explicit RngState(std::uint64_t seed = 0) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += splitmix64_gamma;
    return splitmix64_mix(state_);
  }

  // Top bit of the next output; 1 is heads.
  constexpr bool coin() noexcept { return (next() >> 63) != 0; }

  // Uniform on [0, bound). Draws below 2^64 mod bound are rejected so every
  // residue has exactly floor(2^64 / bound) preimages.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

  constexpr std::uint64_t state() const noexcept { return state_; }

  friend constexpr bool operator==(const RngState&, const RngState&) = default;

 private:
  std::uint64_t state_;
};

// Independent stream for worker `index` of a job seeded with `seed`.
constexpr RngState stream_rng(std::uint64_t seed, std::uint64_t index) noexcept {
  return RngState(splitmix64_mix(seed + index));
}

}  // namespace spvote
