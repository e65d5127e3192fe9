#include "bwc/lattice/vector.hpp"

#include <algorithm>

namespace bwc::lat {

DyadicVector::DyadicVector(int d) : d_(d) {
  gf2::check_dim(d);
  c_.resize(std::size_t{1} << d);
}

DyadicVector::DyadicVector(int d, std::vector<Dyadic> coords) : d_(d), c_(std::move(coords)) {
  gf2::check_dim(d);
  require(c_.size() == (std::size_t{1} << d), Errc::precondition, "coordinate count must be 2^d");
}

DyadicVector DyadicVector::from_ints(int d, const std::vector<Int>& ints, int scale) {
  DyadicVector x(d);
  require(ints.size() == x.size(), Errc::precondition, "coordinate count must be 2^d");
  for (std::size_t i = 0; i < ints.size(); ++i) x.c_[i] = Dyadic(ints[i], scale);
  return x;
}

DyadicVector DyadicVector::unit(int d, gf2::Point i) {
  DyadicVector x(d);
  require(i < x.size(), Errc::precondition, "index outside Omega");
  x.c_[i] = 1;
  return x;
}

DyadicVector DyadicVector::from_word(const gf2::BitWord& a, int m, const gf2::BitWord* signs) {
  DyadicVector x(a.d());
  const Dyadic val = Dyadic::pow2(-m);
  for (gf2::Point p : a.points()) x.c_[p] = (signs && signs->test(p)) ? -val : val;
  return x;
}

bool DyadicVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Dyadic& v) { return v.is_zero(); });
}

int DyadicVector::denominator_log2() const {
  int e = 0;
  for (const auto& v : c_) e = std::max(e, v.exponent());
  return e;
}

std::vector<Int> DyadicVector::to_ints(int scale) const {
  std::vector<Int> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    require(c_[i].exponent() <= scale, Errc::non_dyadic, "vector not integral at this scale");
    out[i] = c_[i].mantissa() << static_cast<mp_bitcnt_t>(scale - c_[i].exponent());
  }
  return out;
}

Dyadic DyadicVector::inner(const DyadicVector& o) const {
  require(d_ == o.d_, Errc::mixed_ambient, "inner product across ambients");
  const int e = std::max(denominator_log2(), o.denominator_log2());
  const auto a = to_ints(e), b = o.to_ints(e);
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) && sgn(b[i])) s += a[i] * b[i];
  return Dyadic(s, 2 * e - d_ / 2);
}

DyadicVector& DyadicVector::operator+=(const DyadicVector& o) {
  require(d_ == o.d_, Errc::mixed_ambient, "adding vectors of different ambients");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

DyadicVector& DyadicVector::operator-=(const DyadicVector& o) {
  require(d_ == o.d_, Errc::mixed_ambient, "subtracting vectors of different ambients");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

DyadicVector& DyadicVector::mul_pow2(int k) {
  for (auto& v : c_) v.mul_pow2(k);
  return *this;
}

DyadicVector& DyadicVector::operator*=(const Int& k) {
  const Dyadic f(k, 0);
  for (auto& v : c_) v *= f;
  return *this;
}

DyadicVector DyadicVector::operator-() const {
  DyadicVector r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

bool operator<(const DyadicVector& a, const DyadicVector& b) {
  if (a.d_ != b.d_) return a.d_ < b.d_;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const auto c = a.c_[i] <=> b.c_[i];
    if (c != 0) return c < 0;
  }
  return false;
}

int scalar_level(const Dyadic& c) {
  require(!c.is_zero(), Errc::precondition, "level of zero scalar");
  if (c.exponent() > 0) return c.exponent();
  return -static_cast<int>(mpz_scan1(c.mantissa().get_mpz_t(), 0));
}

LevelTop level_and_top(const DyadicVector& x) {
  require(!x.is_zero(), Errc::precondition, "level of the zero vector");
  int lv = INT32_MIN;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) lv = std::max(lv, scalar_level(x[i]));
  DyadicVector top(x.d());
  const Dyadic unit = Dyadic::pow2(-lv);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    // digit of |c| at 2^{-lv}; c * 2^{lv} is an integer
    Dyadic c = x[i];
    c.mul_pow2(lv);
    const Int a = abs(c.mantissa());
    if (mpz_tstbit(a.get_mpz_t(), 0)) top[i] = x[i].sign() < 0 ? -unit : unit;
  }
  return {lv, top};
}

}  // namespace bwc::lat
