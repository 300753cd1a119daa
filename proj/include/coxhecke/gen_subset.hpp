#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace coxhecke {

/// A subset J of the generating set S, stored as a bit mask (|S| <= 32).
class GenSubset {
 public:
  constexpr GenSubset() noexcept = default;
  constexpr explicit GenSubset(std::uint32_t bits) noexcept : bits_(bits) {}

  static constexpr GenSubset full(int rank) noexcept {
    return GenSubset(rank >= 32 ? ~0u : ((1u << rank) - 1u));
  }
  static constexpr GenSubset single(int s) noexcept { return GenSubset(1u << s); }

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr bool contains(int s) const noexcept { return (bits_ >> s) & 1u; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool subsetOf(GenSubset other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr GenSubset& insert(int s) noexcept {
    bits_ |= 1u << s;
    return *this;
  }
  constexpr GenSubset operator|(GenSubset o) const noexcept { return GenSubset(bits_ | o.bits_); }
  constexpr GenSubset operator&(GenSubset o) const noexcept { return GenSubset(bits_ & o.bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Bit string over `rank` generators, generator 0 first (e.g. "10" = {s1}).
  std::string bitstring(int rank) const {
    std::string out;
    for (int s = 0; s < rank; ++s) out.push_back(contains(s) ? '1' : '0');
    return out;
  }

  constexpr bool operator==(const GenSubset&) const noexcept = default;
  constexpr auto operator<=>(const GenSubset&) const noexcept = default;

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace coxhecke
