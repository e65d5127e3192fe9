#include "bwc/linalg/dyadic.hpp"

#include "bwc/error.hpp"

namespace bwc::linalg {

Dyadic::Dyadic(mpz_class m, int e) : m_(std::move(m)), e_(e) {
  if (e_ < 0) {
    m_ <<= static_cast<mp_bitcnt_t>(-e_);
    e_ = 0;
  }
  normalize();
}

void Dyadic::normalize() {
  if (m_ == 0) {
    e_ = 0;
    return;
  }
  if (e_ == 0) return;
  const auto tz = static_cast<int>(mpz_scan1(m_.get_mpz_t(), 0));
  const int s = std::min(tz, e_);
  if (s > 0) {
    m_ >>= static_cast<mp_bitcnt_t>(s);
    e_ -= s;
  }
}

Dyadic Dyadic::pow2(int k) { return k >= 0 ? Dyadic(mpz_class(1) << static_cast<mp_bitcnt_t>(k), 0) : Dyadic(1, -k); }

Dyadic Dyadic::parse(std::string_view s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Dyadic(mpz_class(std::string(s)), 0);
    const auto den = s.substr(slash + 1);
    require(den.substr(0, 2) == "2^", Errc::parse, "dyadic denominator must be 2^e");
    const int e = std::stoi(std::string(den.substr(2)));
    require(e >= 0, Errc::parse, "negative dyadic exponent");
    return Dyadic(mpz_class(std::string(s.substr(0, slash))), e);
  } catch (const std::invalid_argument&) {
    fail(Errc::parse, "bad dyadic literal '" + std::string(s) + "'");
  }
}

mpq_class Dyadic::to_mpq() const {
  mpq_class q(m_, mpz_class(1) << static_cast<mp_bitcnt_t>(e_));
  q.canonicalize();
  return q;
}

Dyadic Dyadic::from_mpq(const mpq_class& q) {
  const mpz_class& den = q.get_den();
  const auto tz = mpz_scan1(den.get_mpz_t(), 0);
  require((den >> tz) == 1, Errc::non_dyadic, "denominator is not a power of two");
  return Dyadic(q.get_num(), static_cast<int>(tz));
}

std::string Dyadic::str() const {
  if (e_ == 0) return m_.get_str();
  return m_.get_str() + "/2^" + std::to_string(e_);
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
  if (e_ >= o.e_) {
    m_ += mpz_class(o.m_ << static_cast<mp_bitcnt_t>(e_ - o.e_));
  } else {
    m_ <<= static_cast<mp_bitcnt_t>(o.e_ - e_);
    m_ += o.m_;
    e_ = o.e_;
  }
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& o) { return *this += -o; }

Dyadic& Dyadic::operator*=(const Dyadic& o) {
  m_ *= o.m_;
  e_ += o.e_;
  normalize();
  return *this;
}

Dyadic& Dyadic::mul_pow2(int k) {
  if (m_ == 0) return *this;
  if (k >= 0) {
    const int s = std::min(k, e_);
    e_ -= s;
    m_ <<= static_cast<mp_bitcnt_t>(k - s);
  } else {
    e_ -= k;
    normalize();
  }
  return *this;
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.m_ = -r.m_;
  return r;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int c;
  if (a.e_ == b.e_) {
    c = cmp(a.m_, b.m_);
  } else if (sgn(a.m_) != sgn(b.m_)) {
    c = sgn(a.m_) - sgn(b.m_);
  } else {
    // m_a / 2^e_a vs m_b / 2^e_b
    mpz_class x, y;
    if (a.e_ < b.e_) {
      mpz_mul_2exp(x.get_mpz_t(), a.m_.get_mpz_t(), static_cast<mp_bitcnt_t>(b.e_ - a.e_));
      y = b.m_;
    } else {
      x = a.m_;
      mpz_mul_2exp(y.get_mpz_t(), b.m_.get_mpz_t(), static_cast<mp_bitcnt_t>(a.e_ - b.e_));
    }
    c = cmp(x, y);
  }
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace bwc::linalg
