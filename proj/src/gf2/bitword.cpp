#include "bwc/gf2/bitword.hpp"

#include <algorithm>

namespace bwc::gf2 {

BitWord BitWord::full(int d) {
  BitWord w(d);
  const int n = 1 << d;
  for (int i = 0; i < kWords; ++i) {
    const int lo = i * 64;
    if (lo >= n) break;
    const int span = std::min(64, n - lo);
    w.bits_[i] = span == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << span) - 1);
  }
  return w;
}

BitWord BitWord::point(int d, Point p) {
  BitWord w(d);
  require(p < (Point{1} << d), Errc::precondition, "point outside Omega");
  w.set(p);
  return w;
}

BitWord BitWord::from_points(int d, const std::vector<Point>& pts) {
  BitWord w(d);
  for (Point p : pts) {
    require(p < (Point{1} << d), Errc::precondition, "point outside Omega");
    w.flip(p);
  }
  return w;
}

BitWord BitWord::from_hex(int d, std::string_view hex) {
  BitWord w(d);
  const std::size_t digits = static_cast<std::size_t>(((1 << d) + 3) / 4);
  require(hex.size() == digits, Errc::parse,
          "hex word for d=" + std::to_string(d) + " needs " + std::to_string(digits) + " digits");
  for (std::size_t k = 0; k < digits; ++k) {
    const char ch = hex[digits - 1 - k];
    int v;
    if (ch >= '0' && ch <= '9') v = ch - '0';
    else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
    else fail(Errc::parse, "bad hex digit in word");
    for (int b = 0; b < 4; ++b) {
      if (!((v >> b) & 1)) continue;
      const Point p = static_cast<Point>(4 * k + b);
      require(p < (Point{1} << d), Errc::parse, "hex word has bits beyond 2^d");
      w.set(p);
    }
  }
  return w;
}

int BitWord::weight() const {
  int s = 0;
  for (auto x : bits_) s += std::popcount(x);
  return s;
}

bool BitWord::empty() const {
  for (auto x : bits_)
    if (x) return false;
  return true;
}

int BitWord::highest() const {
  for (int i = kWords - 1; i >= 0; --i)
    if (bits_[i]) return i * 64 + 63 - std::countl_zero(bits_[i]);
  return -1;
}

std::vector<Point> BitWord::points() const {
  std::vector<Point> out;
  for (int i = 0; i < kWords; ++i) {
    auto x = bits_[i];
    while (x) {
      out.push_back(static_cast<Point>(i * 64 + std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return out;
}

BitWord& BitWord::operator+=(const BitWord& o) {
  require(d_ == o.d_, Errc::mixed_ambient, "adding words of different length");
  for (int i = 0; i < kWords; ++i) bits_[i] ^= o.bits_[i];
  return *this;
}

BitWord& BitWord::operator&=(const BitWord& o) {
  require(d_ == o.d_, Errc::mixed_ambient, "intersecting words of different length");
  for (int i = 0; i < kWords; ++i) bits_[i] &= o.bits_[i];
  return *this;
}

BitWord BitWord::complement() const { return *this + full(d_); }

bool BitWord::dot(const BitWord& o) const {
  require(d_ == o.d_, Errc::mixed_ambient, "pairing words of different length");
  int s = 0;
  for (int i = 0; i < kWords; ++i) s += std::popcount(bits_[i] & o.bits_[i]);
  return s & 1;
}

BitWord BitWord::translate(Point c) const {
  BitWord out(d_);
  for (Point p : points()) out.set(p ^ c);
  return out;
}

std::string BitWord::hex() const {
  const int digits = ((1 << d_) + 3) / 4;
  std::string s(static_cast<std::size_t>(digits), '0');
  for (int k = 0; k < digits; ++k) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      const int p = 4 * k + b;
      if (p < (1 << d_) && test(static_cast<Point>(p))) v |= 1 << b;
    }
    s[static_cast<std::size_t>(digits - 1 - k)] = "0123456789abcdef"[v];
  }
  return s;
}

std::size_t BitWordHash::operator()(const BitWord& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.d()) * 0x9e3779b97f4a7c15ULL;
  for (auto x : w.raw()) h = (h ^ x) * 0x100000001b3ULL + (h >> 29);
  return h;
}

}  // namespace bwc::gf2
