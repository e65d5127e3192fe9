#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bwc/error.hpp"

namespace bwc::gf2 {

// A point of Omega = F_2^d. Bit i of the integer is coordinate x_{i+1}.
using Point = std::uint32_t;

inline constexpr int kMaxDim = 9;

inline void check_dim(int d) {
  require(d >= 1 && d <= kMaxDim, Errc::size,
          "dimension d=" + std::to_string(d) + " outside supported range [1, 9]");
}

// Subset of Omega_d, stored as a 2^d-bit mask. Addition is symmetric difference.
class BitWord {
 public:
  static constexpr int kWords = (1 << kMaxDim) / 64;

  BitWord() = default;
  explicit BitWord(int d) : d_(d) { check_dim(d); }

  static BitWord full(int d);
  static BitWord point(int d, Point p);
  static BitWord from_points(int d, const std::vector<Point>& pts);
  // Lowercase hex, ceil(2^d / 4) digits, most significant first; bit 0 is point 0.
  static BitWord from_hex(int d, std::string_view hex);

  int d() const { return d_; }
  int length() const { return 1 << d_; }

  bool test(Point p) const { return (bits_[p >> 6] >> (p & 63)) & 1U; }
  void set(Point p) { bits_[p >> 6] |= std::uint64_t{1} << (p & 63); }
  void reset(Point p) { bits_[p >> 6] &= ~(std::uint64_t{1} << (p & 63)); }
  void flip(Point p) { bits_[p >> 6] ^= std::uint64_t{1} << (p & 63); }

  int weight() const;
  bool empty() const;
  // Highest set point, or -1 for the empty word.
  int highest() const;
  std::vector<Point> points() const;

  BitWord& operator+=(const BitWord& o);
  BitWord& operator&=(const BitWord& o);
  friend BitWord operator+(BitWord a, const BitWord& b) { return a += b; }
  friend BitWord operator&(BitWord a, const BitWord& b) { return a &= b; }
  BitWord complement() const;
  // Parity of |this ∩ o|.
  bool dot(const BitWord& o) const;

  // Image under the translation x -> x + c.
  BitWord translate(Point c) const;

  std::string hex() const;

  const std::array<std::uint64_t, kWords>& raw() const { return bits_; }

  friend bool operator==(const BitWord&, const BitWord&) = default;
  friend auto operator<=>(const BitWord& a, const BitWord& b) {
    if (a.d_ != b.d_) return a.d_ <=> b.d_;
    for (int i = kWords - 1; i >= 0; --i)
      if (a.bits_[i] != b.bits_[i]) return a.bits_[i] <=> b.bits_[i];
    return std::strong_ordering::equal;
  }

 private:
  int d_ = 0;
  std::array<std::uint64_t, kWords> bits_{};
};

struct BitWordHash {
  std::size_t operator()(const BitWord& w) const noexcept;
};

}  // namespace bwc::gf2
