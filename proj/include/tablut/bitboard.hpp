#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>

#include "tablut/coord.hpp"

namespace tablut {

// 81-bit cell set; bit i is the cell with Coord::index() == i.
class Bitboard {
 public:
  constexpr Bitboard() = default;

  constexpr bool test(int i) const {
    return i < 64 ? (lo_ >> i) & 1U : (hi_ >> (i - 64)) & 1U;
  }
  constexpr void set(int i) {
    if (i < 64)
      lo_ |= std::uint64_t{1} << i;
    else
      hi_ |= std::uint64_t{1} << (i - 64);
  }
  constexpr void reset(int i) {
    if (i < 64)
      lo_ &= ~(std::uint64_t{1} << i);
    else
      hi_ &= ~(std::uint64_t{1} << (i - 64));
  }

  bool test(Coord c) const { return test(c.index()); }
  void set(Coord c) { set(c.index()); }
  void reset(Coord c) { reset(c.index()); }

  constexpr int count() const { return std::popcount(lo_) + std::popcount(hi_); }
  constexpr bool empty() const { return (lo_ | hi_) == 0; }

  constexpr Bitboard operator|(Bitboard o) const { return {lo_ | o.lo_, hi_ | o.hi_}; }
  constexpr Bitboard operator&(Bitboard o) const { return {lo_ & o.lo_, hi_ & o.hi_}; }

  // Calls f(index) for each set bit in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t w = lo_; w != 0; w &= w - 1) f(std::countr_zero(w));
    for (std::uint64_t w = hi_; w != 0; w &= w - 1) f(64 + std::countr_zero(w));
  }

  std::uint64_t lo() const { return lo_; }
  std::uint64_t hi() const { return hi_; }

  friend constexpr auto operator<=>(const Bitboard&, const Bitboard&) = default;
  friend constexpr bool operator==(const Bitboard&, const Bitboard&) = default;

 private:
  constexpr Bitboard(std::uint64_t lo, std::uint64_t hi) : lo_(lo), hi_(hi) {}

  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
};

}  // namespace tablut
