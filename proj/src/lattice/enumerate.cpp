#include "bwc/lattice/enumerate.hpp"

#include <algorithm>

namespace bwc::lat {

namespace {

Int round_div(const Int& a, const Int& b) {
  // nearest integer to a/b, b > 0
  Int q;
  Int twice = 2 * a + b;
  Int den = 2 * b;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den.get_mpz_t());
  return q;
}

void exact_div(Int& r, const Int& a, const Int& b) { mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); }

}  // namespace

LllResult lll_gram(const IntMatrix& g0) {
  const std::size_t n = g0.rows();
  require(g0.cols() == n, Errc::precondition, "Gram matrix must be square");
  // 1-based indices below
  IntMatrix b(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i + 1, j + 1) = g0(i, j);
  IntMatrix h = IntMatrix::identity(n + 1);
  std::vector<Int> dd(n + 1);
  IntMatrix lam(n + 1, n + 1);
  dd[0] = 1;
  if (n == 0) return {IntMatrix(0, 0), IntMatrix(0, 0)};
  dd[1] = b(1, 1);
  require(dd[1] > 0, Errc::precondition, "Gram matrix is not positive definite");

  auto red = [&](std::size_t k, std::size_t l) {
    if (2 * abs(lam(k, l)) <= dd[l]) return;
    const Int q = round_div(lam(k, l), dd[l]);
    // b_k <- b_k - q b_l
    for (std::size_t i = 1; i <= n; ++i) h(k, i) -= q * h(l, i);
    const Int bkl = b(k, l), bll = b(l, l);
    b(k, k) += q * q * bll - 2 * q * bkl;
    for (std::size_t i = 1; i <= n; ++i) {
      if (i == k) continue;
      b(k, i) -= q * b(l, i);
      b(i, k) = b(k, i);
    }
    lam(k, l) -= q * dd[l];
    for (std::size_t i = 1; i < l; ++i) lam(k, i) -= q * lam(l, i);
  };

  auto swap_k = [&](std::size_t k, std::size_t kmax) {
    h.swap_rows(k, k - 1);
    b.swap_rows(k, k - 1);
    for (std::size_t i = 1; i <= n; ++i) std::swap(b(i, k), b(i, k - 1));
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam(k, j), lam(k - 1, j));
    const Int lm = lam(k, k - 1);
    Int bb;
    exact_div(bb, dd[k - 2] * dd[k] + lm * lm, dd[k - 1]);
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Int t = lam(i, k);
      exact_div(lam(i, k), dd[k] * lam(i, k - 1) - lm * t, dd[k - 1]);
      exact_div(lam(i, k - 1), bb * t + lm * lam(i, k), dd[k]);
    }
    dd[k - 1] = bb;
  };

  std::size_t k = 2, kmax = 1;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        Int u = b(k, j);
        for (std::size_t i = 1; i < j; ++i) exact_div(u, dd[i] * u - lam(k, i) * lam(j, i), dd[i - 1]);
        if (j < k) {
          lam(k, j) = u;
        } else {
          dd[k] = u;
          require(u > 0, Errc::precondition, "Gram matrix is not positive definite");
        }
      }
    }
    red(k, k - 1);
    if (4 * dd[k] * dd[k - 2] < 3 * dd[k - 1] * dd[k - 1] - 4 * lam(k, k - 1) * lam(k, k - 1)) {
      swap_k(k, kmax);
      if (k > 2) --k;
    } else {
      for (std::size_t l = k - 2; l >= 1; --l) red(k, l);
      ++k;
    }
  }
  LllResult out{IntMatrix(n, n), IntMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.transform(i, j) = h(i + 1, j + 1);
      out.gram(i, j) = b(i + 1, j + 1);
    }
  return out;
}

IntegralLdl integral_ldl(const IntMatrix& g) {
  const std::size_t n = g.rows();
  IntegralLdl out{std::vector<Int>(n + 1), IntMatrix(n, n)};
  out.delta[0] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j <= k; ++j) {
      Int u = g(k, j);
      for (std::size_t i = 0; i < j; ++i)
        exact_div(u, out.delta[i + 1] * u - out.lambda(k, i) * out.lambda(j, i), out.delta[i]);
      if (j < k) {
        out.lambda(k, j) = u;
      } else {
        require(u > 0, Errc::precondition, "Gram matrix is not positive definite");
        out.delta[k + 1] = u;
      }
    }
  return out;
}

namespace {

// Enumeration over an (already reduced) Gram matrix; coefficients are in
// terms of its own basis.
class Enumerator {
 public:
  Enumerator(const IntMatrix& g, Rat bound, const EnumVisitor& visit, std::uint64_t budget)
      : r_(g.rows()), ldl_(integral_ldl(g)), bound_(std::move(bound)), visit_(visit), budget_(budget) {
    x_.assign(r_, 0);
    sig_ = IntMatrix(r_ + 1, r_ + 1);
    begin_.assign(r_ + 1, r_ == 0 ? 0 : r_ - 1);
    p_.resize(r_);
    for (std::size_t k = 0; k < r_; ++k) p_[k] = ldl_.delta[k] * ldl_.delta[k + 1];
  }

  std::uint64_t run() {
    if (r_ == 0 || bound_ <= 0) return 0;
    level(r_ - 1, Rat(0), Int(0), true);
    return nodes_;
  }

 private:
  void level(std::size_t k, const Rat& partial, const Int& s, bool zero_above) {
    Rat rem = bound_ - partial;
    if (rem < 0) return;
    Int v;
    {
      Int num = rem.get_num() * p_[k];
      mpz_fdiv_q(v.get_mpz_t(), num.get_mpz_t(), rem.get_den().get_mpz_t());
    }
    Int t;
    mpz_sqrt(t.get_mpz_t(), v.get_mpz_t());
    const Int& dk = ldl_.delta[k + 1];
    Int lo, hi;
    {
      Int a = s - t, b = s + t;
      mpz_cdiv_q(lo.get_mpz_t(), a.get_mpz_t(), dk.get_mpz_t());
      mpz_fdiv_q(hi.get_mpz_t(), b.get_mpz_t(), dk.get_mpz_t());
    }
    if (zero_above && lo < 0) lo = 0;
    if (lo > hi) return;
    require(lo.fits_slong_p() && hi.fits_slong_p(), Errc::internal, "enumeration coefficient overflow");
    const long l0 = lo.get_si(), h0 = hi.get_si();
    Int y;
    Rat np;
    for (long xv = l0; xv <= h0; ++xv) {
      if (++nodes_ > budget_) fail(Errc::budget, "enumeration exceeded " + std::to_string(budget_) + " nodes");
      y = dk * xv - s;
      np = Rat(y * y, p_[k]);
      np.canonicalize();
      np += partial;
      if (np > bound_) continue;
      x_[k] = xv;
      if (k == 0) {
        if (zero_above && xv == 0) continue;
        const Int nrm = np.get_num();  // integral for an integer Gram
        auto nb = visit_(x_, nrm);
        if (nb && *nb < bound_) bound_ = *nb;
        continue;
      }
      // refresh center partial sums for row k-1
      for (std::size_t j = begin_[k]; j + 1 > k; --j) {
        sig_(k - 1, j) = sig_(k - 1, j + 1) - ldl_.lambda(j, k - 1) * x_[j];
        if (j == k) break;
      }
      if (begin_[k] > begin_[k - 1]) begin_[k - 1] = begin_[k];
      begin_[k] = k;
      level(k - 1, np, sig_(k - 1, k), zero_above && xv == 0);
    }
    x_[k] = 0;
    // x_k returns to zero, rows below must refresh index k
    if (k > 0 && begin_[k] < k) begin_[k] = k;
  }

  std::size_t r_;
  IntegralLdl ldl_;
  Rat bound_;
  const EnumVisitor& visit_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::int64_t> x_;
  IntMatrix sig_;
  std::vector<std::size_t> begin_;
  std::vector<Int> p_;
};

struct Reduced {
  LllResult lll;
  std::vector<std::vector<Int>> rows;  // reduced basis, integer coordinates at lattice scale
};

Reduced reduce_lattice(const Lattice& l) {
  Reduced out;
  const GramMatrix g = gram(l);
  out.lll = lll_gram(g.m);
  const auto& t = out.lll.transform;
  const std::size_t r = l.rank(), n = l.int_basis().cols();
  out.rows.assign(r, std::vector<Int>(n));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (sgn(t(i, j)) == 0) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(l.int_basis()(j, k))) out.rows[i][k] += t(i, j) * l.int_basis()(j, k);
    }
  return out;
}

DyadicVector ambient_of(const Lattice& l, const Reduced& red, const std::vector<std::int64_t>& y) {
  std::vector<Int> v(l.int_basis().cols());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 0) continue;
    const Int c = static_cast<long>(y[i]);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (sgn(red.rows[i][k])) v[k] += c * red.rows[i][k];
  }
  // first nonzero coordinate positive
  for (const auto& e : v)
    if (sgn(e)) {
      if (sgn(e) < 0)
        for (auto& w : v) w = -w;
      break;
    }
  return DyadicVector::from_ints(l.d(), v, l.scale());
}

Int norm_granularity(const IntMatrix& g) {
  Int q = 0;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) q = gcd(q, i == j ? g(i, j) : Int(2 * g(i, j)));
  return q == 0 ? Int(1) : q;
}

}  // namespace

EnumStats enumerate_gram(const IntMatrix& g, Rat bound, const EnumVisitor& visit, std::uint64_t budget) {
  const LllResult red = lll_gram(g);
  const std::size_t r = g.rows();
  std::vector<std::int64_t> x(r);
  const EnumVisitor wrap = [&](const std::vector<std::int64_t>& y, const Int& nrm) -> std::optional<Rat> {
    for (std::size_t j = 0; j < r; ++j) {
      Int acc = 0;
      for (std::size_t i = 0; i < r; ++i)
        if (y[i]) acc += red.transform(i, j) * static_cast<long>(y[i]);
      require(acc.fits_slong_p(), Errc::internal, "coefficient overflow");
      x[j] = acc.get_si();
    }
    return visit(x, nrm);
  };
  Enumerator e(red.gram, std::move(bound), wrap, budget);
  return {e.run()};
}

ShortVectors enumerate_short(const Lattice& l, const Dyadic& bound, std::uint64_t budget) {
  ShortVectors out;
  if (l.rank() == 0 || bound.sign() <= 0) return out;
  const Reduced red = reduce_lattice(l);
  const int exp = l.d() / 2 - 2 * l.scale();
  Rat b = bound.to_mpq() * Dyadic::pow2(-exp).to_mpq();
  const EnumVisitor visit = [&](const std::vector<std::int64_t>& y, const Int& nrm) -> std::optional<Rat> {
    out.pairs.push_back({ambient_of(l, red, y), Dyadic(nrm, -exp)});
    return std::nullopt;
  };
  Enumerator e(red.lll.gram, b, visit, budget);
  out.nodes = e.run();
  out.total = 2 * out.pairs.size();
  std::sort(out.pairs.begin(), out.pairs.end(), [](const ShortVector& a, const ShortVector& c) {
    if (a.norm != c.norm) return a.norm < c.norm;
    return a.v < c.v;
  });
  return out;
}

MinNorm min_norm(const Lattice& l, std::uint64_t budget) {
  require(l.rank() > 0, Errc::precondition, "minimum of the zero lattice");
  const Reduced red = reduce_lattice(l);
  const int exp = l.d() / 2 - 2 * l.scale();
  const IntMatrix& g = red.lll.gram;
  std::size_t best_i = 0;
  for (std::size_t i = 1; i < g.rows(); ++i)
    if (g(i, i) < g(best_i, best_i)) best_i = i;
  Int best = g(best_i, best_i);
  std::vector<std::int64_t> best_y(g.rows(), 0);
  best_y[best_i] = 1;
  const Int step = norm_granularity(g);
  const EnumVisitor visit = [&](const std::vector<std::int64_t>& y, const Int& nrm) -> std::optional<Rat> {
    if (nrm < best) {
      best = nrm;
      best_y = y;
    }
    return Rat(best - step);
  };
  Enumerator e(g, Rat(best - step), visit, budget);
  const auto nodes = e.run();
  return {Dyadic(best, -exp), ambient_of(l, red, best_y), nodes};
}

ThetaSeries theta(const Lattice& l, const Dyadic& bound, std::uint64_t budget) {
  ThetaSeries t{bound, {}};
  t.counts[Dyadic(0)] = 1;
  for (const auto& sv : enumerate_short(l, bound, budget).pairs) t.counts[sv.norm] += 2;
  return t;
}

ThetaSeries theta_gram(const IntMatrix& g, const Dyadic& bound, std::uint64_t budget) {
  ThetaSeries t{bound, {}};
  t.counts[Dyadic(0)] = 1;
  enumerate_gram(
      g, bound.to_mpq(),
      [&](const std::vector<std::int64_t>&, const Int& nrm) -> std::optional<Rat> {
        t.counts[Dyadic(nrm, 0)] += 2;
        return std::nullopt;
      },
      budget);
  return t;
}

std::vector<DyadicVector> reduced_basis(const Lattice& l) {
  const Reduced red = reduce_lattice(l);
  std::vector<DyadicVector> out;
  for (const auto& r : red.rows) out.push_back(DyadicVector::from_ints(l.d(), r, l.scale()));
  return out;
}

}  // namespace bwc::lat
