#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace bwc::linalg {

// Exact element of Z[1/2]: mantissa / 2^exponent, canonical (odd mantissa or zero).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long v) : m_(v) {}  // NOLINT(google-explicit-constructor)
  Dyadic(mpz_class m, int e);

  static Dyadic pow2(int k);  // 2^k, k may be negative
  static Dyadic parse(std::string_view s);

  const mpz_class& mantissa() const { return m_; }
  int exponent() const { return e_; }
  bool is_zero() const { return m_ == 0; }
  bool is_integer() const { return e_ == 0; }
  int sign() const { return sgn(m_); }
  mpq_class to_mpq() const;
  // Requires the denominator of q to be a power of two.
  static Dyadic from_mpq(const mpq_class& q);

  // "m/2^e", or just "m" when e == 0.
  std::string str() const;

  Dyadic& operator+=(const Dyadic& o);
  Dyadic& operator-=(const Dyadic& o);
  Dyadic& operator*=(const Dyadic& o);
  Dyadic& mul_pow2(int k);
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }
  Dyadic operator-() const;

  friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.e_ == b.e_ && a.m_ == b.m_; }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void normalize();
  mpz_class m_;
  int e_ = 0;
};

}  // namespace bwc::linalg
