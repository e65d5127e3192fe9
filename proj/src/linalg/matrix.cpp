#include "bwc/linalg/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "bwc/error.hpp"

namespace bwc::linalg {

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  for (const auto& r : init) {
    require(r.size() == cols_, Errc::precondition, "ragged matrix literal");
    for (long x : r) a_.emplace_back(x);
  }
}

template <class T>
void Matrix<T>::append_row(const std::vector<T>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  require(r.size() == cols_, Errc::precondition, "row length mismatch");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

template <class T>
void Matrix<T>::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <class T>
Matrix<T> Matrix<T>::take_rows(std::size_t n) const {
  Matrix out(n, cols_);
  std::copy(a_.begin(), a_.begin() + static_cast<std::ptrdiff_t>(n * cols_), out.a_.begin());
  return out;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  require(a.cols() == b.rows(), Errc::precondition, "matrix shapes do not chain");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template class Matrix<Int>;
template class Matrix<Rat>;
template IntMatrix operator*(const IntMatrix&, const IntMatrix&);
template RatMatrix operator*(const RatMatrix&, const RatMatrix&);

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

namespace {

// s*a + t*b = g > 0
void xgcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g < 0) {
    g = -g;
    s = -s;
    t = -t;
  }
}

// (ri, rj) <- (s*ri + t*rj, u*ri + v*rj)
void combine(IntMatrix& m, std::size_t i, std::size_t j, const Int& s, const Int& t, const Int& u,
             const Int& v, std::size_t from = 0) {
  Int x, y;
  for (std::size_t k = from; k < m.cols(); ++k) {
    x = s * m(i, k) + t * m(j, k);
    y = u * m(i, k) + v * m(j, k);
    m(i, k) = x;
    m(j, k) = y;
  }
}

void axpy_row(IntMatrix& m, std::size_t dst, const Int& q, std::size_t src, std::size_t from = 0) {
  for (std::size_t k = from; k < m.cols(); ++k) m(dst, k) -= q * m(src, k);
}

}  // namespace

HnfResult hnf_with_transform(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t r = 0;
  Int g, s, t, q;
  for (std::size_t j = 0; j < a.cols() && r < a.rows(); ++j) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, j)) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    u.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (sgn(a(i, j)) == 0) continue;
      const Int x = a(r, j), y = a(i, j);
      xgcd(x, y, g, s, t);
      const Int uu = -y / g, vv = x / g;
      combine(a, r, i, s, t, uu, vv, j);
      combine(u, r, i, s, t, uu, vv);
    }
    if (sgn(a(r, j)) < 0) {
      for (std::size_t k = j; k < a.cols(); ++k) a(r, k) = -a(r, k);
      for (std::size_t k = 0; k < u.cols(); ++k) u(r, k) = -u(r, k);
    }
    for (std::size_t i = 0; i < r; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), a(i, j).get_mpz_t(), a(r, j).get_mpz_t());
      if (sgn(q) == 0) continue;
      axpy_row(a, i, q, r, j);
      axpy_row(u, i, q, r);
    }
    ++r;
  }
  return {a.take_rows(r), u};
}

IntMatrix hnf(const IntMatrix& m) {
  HnfBuilder b(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) b.add(m.row_vector(i));
  return b.result();
}

namespace {

Int mod(const Int& x, const Int& d) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return r;
}

// Unimodular 2x2 step on rows (or columns) p, q that clears entry q:
// (x, y) at the pivot column become (g, 0).
template <class Get>
void combine(std::size_t n, const Int& x, const Int& y, const Int& dm, Get at) {
  Int g, s, t;
  if (sgn(x) != 0 && mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t())) {
    // plain elimination keeps the pivot line unchanged
    g = x;
    s = 1;
    t = 0;
  } else {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  }
  const Int xg = x / g, yg = y / g;
  for (std::size_t c = 0; c < n; ++c) {
    Int& a = at(0, c);
    Int& b = at(1, c);
    const Int na = mod(s * a + t * b, dm);
    const Int nb = mod(xg * b - yg * a, dm);
    a = na;
    b = nb;
  }
}

// Invariant factors of a nonsingular square matrix with |det| = dm. Row and
// column operations run mod dm, which is harmless since dm Z^n lies in the row span.
std::vector<Int> snf_mod(const IntMatrix& m, const Int& dm) {
  const std::size_t n = m.rows();
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = mod(m(i, j), dm);
  std::vector<Int> d;
  for (std::size_t k = 0; k < n; ++k) {
    for (int guard = 0;; ++guard) {
      require(guard < 100000, Errc::internal, "snf did not converge");
      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (sgn(a(i, k)) == 0) continue;
        clean = false;
        const Int x = a(k, k), y = a(i, k);
        combine(n, x, y, dm, [&](int w, std::size_t c) -> Int& { return a(w ? i : k, c); });
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (sgn(a(k, j)) == 0) continue;
        clean = false;
        const Int x = a(k, k), y = a(k, j);
        combine(n, x, y, dm, [&](int w, std::size_t c) -> Int& { return a(c, w ? j : k); });
      }
      if (clean) break;
    }
    d.push_back(gcd(a(k, k), dm));
  }
  return d;
}

}  // namespace

std::vector<Int> snf(const IntMatrix& m) {
  if (m.rows() == m.cols() && m.rows() > 0) {
    const Int dt = abs(det_bareiss(m));
    if (sgn(dt) != 0) {
      std::vector<Int> d = snf_mod(m, dt);
      for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
          Int g = gcd(d[i], d[j]);
          Int l = lcm(d[i], d[j]);
          d[i] = g;
          d[j] = l;
        }
      return d;
    }
  }
  IntMatrix a = hnf(m);
  for (int guard = 0;; ++guard) {
    require(guard < 10000, Errc::internal, "snf did not converge");
    bool diagonal = true;
    for (std::size_t i = 0; i < a.rows() && diagonal; ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (i != j && sgn(a(i, j)) != 0) {
          diagonal = false;
          break;
        }
    if (diagonal && a.rows() == a.cols()) break;
    a = hnf(a.transpose());
  }
  std::vector<Int> d;
  for (std::size_t i = 0; i < a.rows(); ++i) d.push_back(abs(a(i, i)));
  // restore the divisibility chain
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Int g = gcd(d[i], d[j]);
      Int l = lcm(d[i], d[j]);
      d[i] = g;
      d[j] = l;
    }
  return d;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const HnfResult r = hnf_with_transform(m);
  IntMatrix k(0, m.rows());
  for (std::size_t i = r.h.rows(); i < m.rows(); ++i) k.append_row(r.u.row_vector(i));
  if (k.rows() == 0) return IntMatrix(0, m.rows());
  return hnf(k);
}

Int det_bareiss(const IntMatrix& m) {
  require(m.rows() == m.cols(), Errc::precondition, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) { return hnf(m).rows(); }

RatMatrix inverse(const RatMatrix& m) {
  require(m.rows() == m.cols(), Errc::precondition, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m, inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    require(p < n, Errc::precondition, "matrix is singular");
    a.swap_rows(c, p);
    inv.swap_rows(c, p);
    const Rat piv = a(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) /= piv;
      inv(c, k) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a(i, c)) == 0) continue;
      const Rat f = a(i, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(i, k) -= f * a(c, k);
        inv(i, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

std::vector<Rat> solve_left(const RatMatrix& a, const std::vector<Rat>& b) {
  require(b.size() == a.cols(), Errc::precondition, "right-hand side length mismatch");
  const RatMatrix inv = inverse(a);
  std::vector<Rat> x(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (sgn(b[j]) == 0) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) x[i] += b[j] * inv(j, i);
  }
  return x;
}

// ---------------------------------------------------------------------------

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 mulmod(i64 a, i64 b, i64 m) { return static_cast<i64>(static_cast<i128>(a) * b % m); }

i64 posmod(i128 a, i64 m) {
  i128 r = a % m;
  if (r < 0) r += m;
  return static_cast<i64>(r);
}

void xgcd64(i64 a, i64 b, i64& g, i64& s, i64& t) {
  i64 r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const i64 q = r0 / r1;
    i64 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  g = r0;
  s = s0;
  t = t0;
}

constexpr i64 kMaxModulus = i64{1} << 40;

}  // namespace

HnfBuilder::HnfBuilder(std::size_t cols, std::optional<Int> modulus) : cols_(cols) {
  if (modulus && *modulus > 0 && *modulus < kMaxModulus) {
    modular_ = true;
    mod_ = modulus->get_si();
    mrows_.resize(cols);
  } else {
    brows_.resize(cols);
  }
}

void HnfBuilder::add(const std::vector<Int>& v) {
  require(v.size() == cols_, Errc::precondition, "vector length mismatch");
  if (!modular_) return add_big(v);
  std::vector<i64> w(cols_);
  Int r;
  const Int m(static_cast<long>(mod_));
  for (std::size_t j = 0; j < cols_; ++j) {
    mpz_fdiv_r(r.get_mpz_t(), v[j].get_mpz_t(), m.get_mpz_t());
    w[j] = r.get_si();
  }
  add_mod(std::move(w), 0);
}

void HnfBuilder::add(const std::vector<i64>& v) {
  require(v.size() == cols_, Errc::precondition, "vector length mismatch");
  if (!modular_) {
    std::vector<Int> w(cols_);
    for (std::size_t j = 0; j < cols_; ++j) w[j] = static_cast<long>(v[j]);
    return add_big(std::move(w));
  }
  std::vector<i64> w(cols_);
  for (std::size_t j = 0; j < cols_; ++j) w[j] = posmod(v[j], mod_);
  add_mod(std::move(w), 0);
}

void HnfBuilder::add_mod(std::vector<i64> v0, std::size_t start) {
  const i64 D = mod_;
  std::vector<std::pair<std::vector<i64>, std::size_t>> pending;
  pending.emplace_back(std::move(v0), start);
  while (!pending.empty()) {
    auto [v, c0] = std::move(pending.back());
    pending.pop_back();
    for (std::size_t c = c0; c < cols_; ++c) {
      const i64 b = v[c];
      if (b == 0) continue;
      auto& row = mrows_[c];
      const i64 a = row.empty() ? D : row[c];
      if (b % a == 0) {
        // row unchanged, clear column c of v
        const i64 q = b / a;
        if (row.empty()) {
          v[c] = 0;
        } else {
          for (std::size_t k = c; k < cols_; ++k) v[k] = posmod(static_cast<i128>(v[k]) - static_cast<i128>(q) * row[k], D);
        }
        continue;
      }
      i64 g, s, t;
      xgcd64(a, b, g, s, t);
      const i64 ag = a / g, bg = b / g;
      std::vector<i64> nrow(cols_, 0);
      if (row.empty()) {
        for (std::size_t k = c + 1; k < cols_; ++k) {
          nrow[k] = mulmod(posmod(t, D), v[k], D);
          v[k] = mulmod(ag % D, v[k], D);
        }
      } else {
        const i64 sm = posmod(s, D), tm = posmod(t, D), agm = ag % D, bgm = posmod(-static_cast<i128>(bg), D);
        for (std::size_t k = c + 1; k < cols_; ++k) {
          const i64 r = row[k], x = v[k];
          nrow[k] = posmod(static_cast<i128>(sm) * r + static_cast<i128>(tm) * x, D);
          v[k] = posmod(static_cast<i128>(agm) * x + static_cast<i128>(bgm) * r, D);
        }
      }
      nrow[c] = g;
      v[c] = 0;
      // closure: (D/g) * nrow vanishes at column c mod D
      std::vector<i64> ann(cols_, 0);
      const i64 dg = D / g;
      bool nz = false;
      for (std::size_t k = c + 1; k < cols_; ++k) {
        ann[k] = mulmod(dg, nrow[k], D);
        nz = nz || ann[k] != 0;
      }
      row = std::move(nrow);
      if (nz) pending.emplace_back(std::move(ann), c + 1);
    }
  }
}

void HnfBuilder::add_big(std::vector<Int> v) {
  Int g, s, t, x, y;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(v[c]) == 0) continue;
    auto& row = brows_[c];
    if (row.empty()) {
      if (sgn(v[c]) < 0)
        for (auto& e : v) e = -e;
      row = std::move(v);
      return;
    }
    const Int a = row[c], b = v[c];
    if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
      const Int q = b / a;
      for (std::size_t k = c; k < cols_; ++k) v[k] -= q * row[k];
      continue;
    }
    xgcd(a, b, g, s, t);
    const Int ag = a / g, bg = b / g;
    for (std::size_t k = c; k < cols_; ++k) {
      x = s * row[k] + t * v[k];
      y = ag * v[k] - bg * row[k];
      row[k] = x;
      v[k] = y;
    }
  }
}

IntMatrix HnfBuilder::result() const {
  std::vector<std::size_t> piv;
  std::vector<std::vector<Int>> rows;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::vector<Int> r;
    if (modular_) {
      r.assign(cols_, 0);
      if (mrows_[c].empty()) {
        r[c] = static_cast<long>(mod_);
      } else {
        for (std::size_t k = 0; k < cols_; ++k) r[k] = static_cast<long>(mrows_[c][k]);
      }
    } else {
      if (brows_[c].empty()) continue;
      r = brows_[c];
    }
    piv.push_back(c);
    rows.push_back(std::move(r));
  }
  // reduce entries above pivots, bottom row first
  Int q;
  for (std::size_t i = rows.size(); i-- > 0;) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const std::size_t c = piv[j];
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[j][c].get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t k = c; k < cols_; ++k) rows[i][k] -= q * rows[j][k];
    }
  }
  IntMatrix out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < cols_; ++k) out(i, k) = rows[i][k];
  return out;
}

}  // namespace bwc::linalg
