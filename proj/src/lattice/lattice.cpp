#include "bwc/lattice/lattice.hpp"

#include <algorithm>
#include <climits>

namespace bwc::lat {

using linalg::HnfBuilder;
using linalg::RatMatrix;

bool GramMatrix::integral() const {
  if (exp >= 0) return true;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (mpz_scan1(m(i, j).get_mpz_t(), 0) < static_cast<mp_bitcnt_t>(-exp) && sgn(m(i, j)) != 0) return false;
  return true;
}

bool GramMatrix::even() const {
  if (!integral()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Dyadic v = at(i, i);
    if (mpz_tstbit(v.mantissa().get_mpz_t(), 0)) return false;
  }
  return true;
}

IntMatrix GramMatrix::integer() const {
  require(integral(), Errc::non_integral, "Gram matrix is not integral");
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = at(i, j).mantissa();
  return out;
}

// ---------------------------------------------------------------------------

Lattice::Lattice(int d) : d_(d), b_(0, std::size_t{1} << d) { gf2::check_dim(d); }

DyadicVector Lattice::basis_vector(std::size_t i) const { return DyadicVector::from_ints(d_, b_.row_vector(i), s_); }

std::vector<DyadicVector> Lattice::basis() const {
  std::vector<DyadicVector> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(basis_vector(i));
  return out;
}

gf2::BitWord Lattice::support() const {
  gf2::BitWord w(d_);
  for (std::size_t i = 0; i < b_.rows(); ++i)
    for (std::size_t j = 0; j < b_.cols(); ++j)
      if (sgn(b_(i, j))) w.set(static_cast<gf2::Point>(j));
  return w;
}

std::optional<std::vector<Int>> Lattice::coefficients(const DyadicVector& x) const {
  require(x.d() == d_, Errc::mixed_ambient, "vector and lattice over different ambients");
  if (x.denominator_log2() > s_) return std::nullopt;
  std::vector<Int> v = x.to_ints(s_);
  std::vector<Int> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::size_t p = piv_[i];
    if (sgn(v[p]) == 0) continue;
    if (!mpz_divisible_p(v[p].get_mpz_t(), b_(i, p).get_mpz_t())) return std::nullopt;
    c[i] = v[p] / b_(i, p);
    for (std::size_t k = p; k < v.size(); ++k)
      if (sgn(b_(i, k))) v[k] -= c[i] * b_(i, k);
  }
  for (const auto& e : v)
    if (sgn(e)) return std::nullopt;
  return c;
}

bool Lattice::contains(const DyadicVector& x) const { return coefficients(x).has_value(); }

bool Lattice::contains_lattice(const Lattice& o) const {
  for (std::size_t i = 0; i < o.rank(); ++i)
    if (!contains(o.basis_vector(i))) return false;
  return true;
}

DyadicVector Lattice::combination(const std::vector<Int>& coeffs) const {
  require(coeffs.size() == rank(), Errc::precondition, "coefficient count must equal rank");
  std::vector<Int> v(b_.cols());
  for (std::size_t i = 0; i < rank(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (sgn(b_(i, k))) v[k] += coeffs[i] * b_(i, k);
  }
  return DyadicVector::from_ints(d_, v, s_);
}

Lattice Lattice::scaled_pow2(int k) const {
  Lattice out = *this;
  if (k <= 0) {
    out.s_ = s_ - k;
    if (mod_) out.mod_ = *mod_ << static_cast<mp_bitcnt_t>(-k);
    return out;
  }
  const int down = std::min(k, s_);
  out.s_ = s_ - down;
  const auto up = static_cast<mp_bitcnt_t>(k - down);
  if (up > 0) {
    for (std::size_t i = 0; i < out.b_.rows(); ++i)
      for (std::size_t j = 0; j < out.b_.cols(); ++j) out.b_(i, j) <<= up;
    if (mod_) out.mod_ = *mod_ << up;
  }
  return out;
}

// ---------------------------------------------------------------------------

LatticeBuilder::LatticeBuilder(int d, int scale, std::optional<Int> modulus, const gf2::BitWord* support)
    : d_(d), scale_(scale), mod_(std::move(modulus)), where_(std::size_t{1} << d, -1), hnf_(0) {
  gf2::check_dim(d);
  require(scale >= 0, Errc::precondition, "builder scale must be nonnegative");
  const std::size_t n = std::size_t{1} << d;
  for (std::size_t j = 0; j < n; ++j)
    if (!support || support->test(static_cast<gf2::Point>(j))) {
      where_[j] = static_cast<long>(cols_.size());
      cols_.push_back(j);
    }
  hnf_ = HnfBuilder(cols_.size(), mod_);
}

void LatticeBuilder::add(const std::vector<Int>& v) {
  require(v.size() == where_.size(), Errc::precondition, "generator length must be 2^d");
  std::vector<Int> w(cols_.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (where_[j] < 0) {
      require(sgn(v[j]) == 0, Errc::precondition, "generator leaves the declared support");
      continue;
    }
    w[static_cast<std::size_t>(where_[j])] = v[j];
  }
  hnf_.add(w);
}

void LatticeBuilder::add(const std::vector<std::int64_t>& v) {
  require(v.size() == where_.size(), Errc::precondition, "generator length must be 2^d");
  std::vector<std::int64_t> w(cols_.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (where_[j] < 0) {
      require(v[j] == 0, Errc::precondition, "generator leaves the declared support");
      continue;
    }
    w[static_cast<std::size_t>(where_[j])] = v[j];
  }
  hnf_.add(w);
}

void LatticeBuilder::add(const DyadicVector& x) {
  require(x.d() == d_, Errc::mixed_ambient, "generator from a different ambient");
  add(x.to_ints(scale_));
}

void LatticeBuilder::add(const Lattice& l) {
  require(l.d() == d_, Errc::mixed_ambient, "lattice from a different ambient");
  require(l.scale() <= scale_, Errc::precondition, "lattice needs a finer builder scale");
  const auto sh = static_cast<mp_bitcnt_t>(scale_ - l.scale());
  for (std::size_t i = 0; i < l.rank(); ++i) {
    auto r = l.int_basis().row_vector(i);
    if (sh)
      for (auto& e : r) e <<= sh;
    add(r);
  }
}

Lattice LatticeBuilder::finish() const {
  const IntMatrix h = hnf_.result();
  Lattice out(d_);
  out.s_ = scale_;
  out.b_ = IntMatrix(h.rows(), where_.size());
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool found = false;
    for (std::size_t k = 0; k < h.cols(); ++k) {
      if (sgn(h(i, k)) == 0) continue;
      out.b_(i, cols_[k]) = h(i, k);
      if (!found) {
        out.piv_.push_back(cols_[k]);
        found = true;
      }
    }
  }
  out.mod_ = mod_;
  // smallest scale
  while (out.s_ > 0) {
    bool all_even = true;
    for (std::size_t i = 0; i < out.b_.rows() && all_even; ++i)
      for (std::size_t j = 0; j < out.b_.cols(); ++j)
        if (mpz_odd_p(out.b_(i, j).get_mpz_t())) {
          all_even = false;
          break;
        }
    if (!all_even) break;
    for (std::size_t i = 0; i < out.b_.rows(); ++i)
      for (std::size_t j = 0; j < out.b_.cols(); ++j) out.b_(i, j) >>= 1;
    --out.s_;
    if (out.mod_) {
      if (mpz_even_p(out.mod_->get_mpz_t()))
        *out.mod_ >>= 1;
      else
        out.mod_.reset();
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Lattice make_lattice(int d, const std::vector<DyadicVector>& gens) {
  require(!gens.empty(), Errc::precondition, "make_lattice needs at least one generator");
  int scale = 0;
  for (const auto& g : gens) {
    require(g.d() == d, Errc::mixed_ambient, "generators from different ambients");
    scale = std::max(scale, g.denominator_log2());
  }
  const std::size_t n = std::size_t{1} << d;
  std::vector<std::vector<Int>> rows;
  for (const auto& g : gens) rows.push_back(g.to_ints(scale));
  IntMatrix m(0, n);
  for (auto& r : rows) m.append_row(r);
  return lattice_from_rows(d, scale, m);
}

Lattice lattice_from_rows(int d, int scale, const IntMatrix& rows, std::optional<Int> modulus) {
  const std::size_t n = std::size_t{1} << d;
  require(rows.rows() == 0 || rows.cols() == n, Errc::precondition, "rows must have 2^d entries");
  gf2::BitWord supp(d);
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(rows(i, j))) supp.set(static_cast<gf2::Point>(j));
  if (!modulus) {
    // axis generators c*e_j on every support coordinate give a modulus
    std::vector<Int> axis(n, 0);
    for (std::size_t i = 0; i < rows.rows(); ++i) {
      std::size_t nz = 0, at = 0;
      for (std::size_t j = 0; j < n && nz < 2; ++j)
        if (sgn(rows(i, j))) {
          ++nz;
          at = j;
        }
      if (nz != 1) continue;
      const Int c = abs(rows(i, at));
      if (axis[at] == 0 || c < axis[at]) axis[at] = c;
    }
    Int D = 1;
    bool ok = supp.weight() > 0;
    for (gf2::Point j : supp.points()) {
      if (axis[j] == 0) {
        ok = false;
        break;
      }
      D = lcm(D, axis[j]);
    }
    if (ok) modulus = D;
  }
  LatticeBuilder b(d, scale, modulus, &supp);
  for (std::size_t i = 0; i < rows.rows(); ++i) b.add(rows.row_vector(i));
  return b.finish();
}

Lattice standard_lattice(int d) {
  return lattice_from_rows(d, 0, IntMatrix::identity(std::size_t{1} << d), Int(1));
}

namespace {

IntMatrix row_gram(const IntMatrix& b) {
  const std::size_t r = b.rows(), n = b.cols();
  IntMatrix g(r, r);
  Int mx = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (abs(b(i, j)) > mx) mx = abs(b(i, j));
  if (mx * mx * static_cast<long>(n + 1) < (Int(1) << 62)) {
    std::vector<std::int64_t> a(r * n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] = b(i, j).get_si();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = i; k < r; ++k) {
        std::int64_t s = 0;
        const std::int64_t* x = &a[i * n];
        const std::int64_t* y = &a[k * n];
        for (std::size_t j = 0; j < n; ++j) s += x[j] * y[j];
        g(i, k) = static_cast<long>(s);
        g(k, i) = g(i, k);
      }
    return g;
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = i; k < r; ++k) {
      Int s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(b(i, j)) && sgn(b(k, j))) s += b(i, j) * b(k, j);
      g(i, k) = s;
      g(k, i) = s;
    }
  return g;
}

}  // namespace

GramMatrix gram(const Lattice& l) { return {row_gram(l.int_basis()), l.d() / 2 - 2 * l.scale()}; }

GramMatrix gram_of(int d, const std::vector<DyadicVector>& vs) {
  int scale = 0;
  for (const auto& v : vs) {
    require(v.d() == d, Errc::mixed_ambient, "vectors from different ambients");
    scale = std::max(scale, v.denominator_log2());
  }
  IntMatrix m(0, std::size_t{1} << d);
  for (const auto& v : vs) m.append_row(v.to_ints(scale));
  if (vs.empty()) return {IntMatrix(0, 0), 0};
  return {row_gram(m), d / 2 - 2 * scale};
}

Dyadic det(const Lattice& l) {
  const std::size_t r = l.rank();
  if (r == 0) return 1;
  const int exp = l.d() / 2 - 2 * l.scale();
  if (static_cast<std::size_t>(l.support().weight()) == r) {
    Int p = 1;
    for (std::size_t i = 0; i < r; ++i) p *= l.int_basis()(i, l.pivots()[i]);
    return Dyadic(p * p, -exp * static_cast<int>(r));
  }
  return Dyadic(linalg::det_bareiss(gram(l).m), -exp * static_cast<int>(r));
}

bool is_integral(const Lattice& l) { return gram(l).integral(); }
bool is_even(const Lattice& l) { return gram(l).even(); }

Lattice dual(const Lattice& l) {
  const std::size_t r = l.rank();
  if (r == 0) return l;
  const GramMatrix g = gram(l);
  RatMatrix inv = linalg::inverse(linalg::to_rational(g.m));
  // y_i = sum_j inv_ij b_j, with b_j = B_j / 2^s and Gram = G * 2^exp
  const Rat f = Dyadic::pow2(-g.exp - l.scale()).to_mpq();
  const std::size_t n = l.int_basis().cols();
  std::vector<DyadicVector> ys;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Rat> y(n);
    for (std::size_t j = 0; j < r; ++j) {
      if (sgn(inv(i, j)) == 0) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(l.int_basis()(j, k))) y[k] += inv(i, j) * l.int_basis()(j, k);
    }
    std::vector<Dyadic> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = Dyadic::from_mpq(y[k] * f);
    ys.emplace_back(l.d(), std::move(c));
  }
  return make_lattice(l.d(), ys);
}

Lattice sum(const Lattice& a, const Lattice& b) {
  require(a.d() == b.d(), Errc::mixed_ambient, "sum of lattices in different ambients");
  const int s = std::max(a.scale(), b.scale());
  std::optional<Int> mod;
  const gf2::BitWord supp = a.support() + b.support() + (a.support() & b.support());
  if (a.modulus_hint() && b.modulus_hint())
    mod = lcm(Int(*a.modulus_hint() << static_cast<mp_bitcnt_t>(s - a.scale())),
              Int(*b.modulus_hint() << static_cast<mp_bitcnt_t>(s - b.scale())));
  if (a.rank() == 0 || b.rank() == 0) mod.reset();
  LatticeBuilder bl(a.d(), s, mod, &supp);
  bl.add(a);
  bl.add(b);
  return bl.finish();
}

namespace {

// a inside Z[1/2] (x) b: solve c * D = 0 mod 2^K over the coefficients of a
std::optional<Lattice> intersect_dyadic(const Lattice& a, const Lattice& b) {
  const std::size_t ra = a.rank(), rb = b.rank();
  int kk = 0;
  for (std::size_t i = 0; i < ra; ++i) {
    int k = 0;
    std::optional<std::vector<Int>> co;
    for (; k <= 48; ++k) {
      DyadicVector x = a.basis_vector(i);
      x.mul_pow2(k);
      if ((co = b.coefficients(x))) break;
    }
    if (!co) return std::nullopt;
    kk = std::max(kk, k);
  }
  if (kk == 0) return a;
  const auto bits = static_cast<mp_bitcnt_t>(kk);
  auto red = [&](Int& x) { mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), bits); };
  IntMatrix dm(ra, rb), u(ra, ra);
  for (std::size_t i = 0; i < ra; ++i) {
    u(i, i) = 1;
    DyadicVector x = a.basis_vector(i);
    x.mul_pow2(kk);
    const auto co = b.coefficients(x);
    for (std::size_t j = 0; j < rb; ++j) {
      dm(i, j) = (*co)[j];
      red(dm(i, j));
    }
  }
  std::vector<int> val;
  std::size_t t = 0;
  for (; t < std::min(ra, rb); ++t) {
    int best = kk;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = t; i < ra; ++i)
      for (std::size_t j = t; j < rb; ++j)
        if (sgn(dm(i, j))) {
          const int v = static_cast<int>(mpz_scan1(dm(i, j).get_mpz_t(), 0));
          if (v < best) best = v, bi = i, bj = j;
        }
    if (best == kk) break;
    dm.swap_rows(t, bi);
    u.swap_rows(t, bi);
    for (std::size_t i = 0; i < ra; ++i) std::swap(dm(i, t), dm(i, bj));
    Int odd = dm(t, t) >> static_cast<mp_bitcnt_t>(best), inv, m = Int(1) << bits;
    mpz_invert(inv.get_mpz_t(), odd.get_mpz_t(), m.get_mpz_t());
    for (std::size_t j = 0; j < rb; ++j) dm(t, j) *= inv, red(dm(t, j));
    for (std::size_t j = 0; j < ra; ++j) u(t, j) *= inv, red(u(t, j));
    for (std::size_t i = t + 1; i < ra; ++i) {
      if (!sgn(dm(i, t))) continue;
      const Int q = dm(i, t) >> static_cast<mp_bitcnt_t>(best);
      for (std::size_t j = t; j < rb; ++j) dm(i, j) -= q * dm(t, j), red(dm(i, j));
      for (std::size_t j = 0; j < ra; ++j) u(i, j) -= q * u(t, j), red(u(i, j));
    }
    for (std::size_t j = t + 1; j < rb; ++j) dm(t, j) = 0;
    val.push_back(best);
  }
  LatticeBuilder bl(a.d(), a.scale());
  const Int half = Int(1) << (bits - 1);
  for (std::size_t i = 0; i < ra; ++i) {
    std::vector<Int> c(ra);
    const mp_bitcnt_t sh = i < val.size() ? static_cast<mp_bitcnt_t>(kk - val[i]) : 0;
    for (std::size_t j = 0; j < ra; ++j) {
      c[j] = u(i, j);
      if (c[j] >= half) c[j] -= Int(1) << bits;
      c[j] <<= sh;
    }
    bl.add(a.combination(c));
  }
  for (std::size_t i = 0; i < ra; ++i) {
    DyadicVector x = a.basis_vector(i);
    x.mul_pow2(kk);
    bl.add(x);
  }
  return bl.finish();
}

}  // namespace

Lattice intersect(const Lattice& a, const Lattice& b) {
  require(a.d() == b.d(), Errc::mixed_ambient, "intersection of lattices in different ambients");
  if (a.rank() == 0) return a;
  if (b.rank() == 0) return b;
  if (b.rank() >= a.rank())
    if (auto r = intersect_dyadic(a, b)) return *r;
  const int s = std::max(a.scale(), b.scale());
  const gf2::BitWord supp = a.support() + b.support() + (a.support() & b.support());
  const auto cols = supp.points();
  const std::size_t ra = a.rank(), rb = b.rank();
  IntMatrix m(ra + rb, cols.size());
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t k = 0; k < cols.size(); ++k) m(i, k) = a.int_basis()(i, cols[k]) << static_cast<mp_bitcnt_t>(s - a.scale());
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t k = 0; k < cols.size(); ++k)
      m(ra + i, k) = b.int_basis()(i, cols[k]) << static_cast<mp_bitcnt_t>(s - b.scale());
  const IntMatrix ker = linalg::integer_kernel(m);
  LatticeBuilder bl(a.d(), s, std::nullopt, &supp);
  const std::size_t n = std::size_t{1} << a.d();
  for (std::size_t t = 0; t < ker.rows(); ++t) {
    std::vector<Int> v(n);
    for (std::size_t i = 0; i < ra; ++i) {
      if (sgn(ker(t, i)) == 0) continue;
      for (std::size_t k = 0; k < cols.size(); ++k) v[cols[k]] += ker(t, i) * m(i, k);
    }
    bl.add(v);
  }
  return bl.finish();
}

Int index_in(const Lattice& sub, const Lattice& l) {
  require(sub.d() == l.d(), Errc::mixed_ambient, "index across ambients");
  require(sub.rank() == l.rank(), Errc::rank_mismatch, "index_in needs equal ranks");
  IntMatrix c(sub.rank(), l.rank());
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    const auto co = l.coefficients(sub.basis_vector(i));
    require(co.has_value(), Errc::precondition, "index_in: sublattice not contained");
    for (std::size_t j = 0; j < l.rank(); ++j) c(i, j) = (*co)[j];
  }
  return abs(linalg::det_bareiss(c));
}

Lattice coordinate_section(const Lattice& l, const gf2::BitWord& keep) {
  require(keep.d() == l.d(), Errc::mixed_ambient, "coordinate mask from another ambient");
  const gf2::BitWord supp = l.support();
  std::vector<std::size_t> order;
  for (gf2::Point j : supp.points())
    if (!keep.test(j)) order.push_back(j);
  const std::size_t ndrop = order.size();
  for (gf2::Point j : supp.points())
    if (keep.test(j)) order.push_back(j);
  HnfBuilder h(order.size(), l.modulus_hint());
  for (std::size_t i = 0; i < l.rank(); ++i) {
    std::vector<Int> w(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) w[k] = l.int_basis()(i, order[k]);
    h.add(w);
  }
  const IntMatrix hr = h.result();
  const std::size_t n = std::size_t{1} << l.d();
  IntMatrix rows(0, n);
  for (std::size_t i = 0; i < hr.rows(); ++i) {
    std::size_t p = 0;
    while (sgn(hr(i, p)) == 0) ++p;
    if (p < ndrop) continue;
    std::vector<Int> v(n);
    for (std::size_t k = ndrop; k < order.size(); ++k) v[order[k]] = hr(i, k);
    rows.append_row(v);
  }
  if (rows.rows() == 0) {
    Lattice z(l.d());
    return z;
  }
  return lattice_from_rows(l.d(), l.scale(), rows, l.modulus_hint());
}

Lattice coordinate_projection(const Lattice& l, const gf2::BitWord& keep) {
  require(keep.d() == l.d(), Errc::mixed_ambient, "coordinate mask from another ambient");
  const std::size_t n = std::size_t{1} << l.d();
  IntMatrix rows(0, n);
  for (std::size_t i = 0; i < l.rank(); ++i) {
    auto r = l.int_basis().row_vector(i);
    for (std::size_t j = 0; j < n; ++j)
      if (!keep.test(static_cast<gf2::Point>(j))) r[j] = 0;
    rows.append_row(r);
  }
  gf2::BitWord supp = l.support() & keep;
  if (supp.empty()) return Lattice(l.d());
  return lattice_from_rows(l.d(), l.scale(), rows, l.modulus_hint());
}

Lattice level_sublattice(const Lattice& l, const Lattice& m, int q) {
  require(q >= 0, Errc::precondition, "level must be nonnegative");
  require(l.d() == m.d(), Errc::mixed_ambient, "level sublattice across ambients");
  // L must sit inside Z[1/2] (x) M: some 2^k L lies in M
  if (l.rank() > 0) {
    const Lattice s = sum(l, m);
    require(s.rank() == m.rank(), Errc::precondition, "L is not inside Q (x) M");
    const Int idx = index_in(m, s);
    require(mpz_popcount(idx.get_mpz_t()) == 1, Errc::precondition, "L is not inside Z[1/2] (x) M");
  }
  return intersect(l, m.scaled_pow2(-q));
}

}  // namespace bwc::lat
