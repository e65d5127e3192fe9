#include "bwc/brw/isometry.hpp"

#include <array>
#include <mutex>

#include "bwc/gf2/codes.hpp"

namespace bwc::brw {

namespace {

const gf2::Code& cached_rm(int k, int d) {
  static std::mutex mu;
  static std::array<std::array<std::optional<gf2::Code>, gf2::kMaxDim + 1>, 3> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)];
  if (!slot) slot = gf2::build_rm(k, d);
  return *slot;
}

Point apply_linear(const std::vector<Point>& rows, Point x) {
  Point y = 0;
  for (std::size_t j = 0; x; ++j, x >>= 1)
    if (x & 1U) y ^= rows[j];
  return y;
}

}  // namespace

MonomialIsometry::MonomialIsometry(BitWord sign, std::vector<Point> linear, Point translate)
    : sign_(std::move(sign)), lin_(std::move(linear)), shift_(translate) {
  const int d = sign_.d();
  gf2::check_dim(d);
  require(lin_.size() == static_cast<std::size_t>(d), Errc::precondition, "linear part needs d rows");
  require(shift_ < (Point{1} << d), Errc::precondition, "translation outside Omega");
  for (Point r : lin_) require(r < (Point{1} << d), Errc::precondition, "linear row outside Omega");
  require(gf2::LinearSpan(d, lin_).dimension() == d, Errc::precondition, "linear part is singular");
}

MonomialIsometry MonomialIsometry::identity(int d) {
  std::vector<Point> rows(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) rows[static_cast<std::size_t>(j)] = Point{1} << j;
  return {BitWord(d), rows, 0};
}

MonomialIsometry MonomialIsometry::minus_one(int d) { return sign_change(BitWord::full(d)); }

MonomialIsometry MonomialIsometry::sign_change(const BitWord& s) {
  MonomialIsometry g = identity(s.d());
  g.sign_ = s;
  return g;
}

MonomialIsometry MonomialIsometry::translation(int d, Point c) {
  MonomialIsometry g = identity(d);
  require(c < (Point{1} << d), Errc::precondition, "translation outside Omega");
  g.shift_ = c;
  return g;
}

MonomialIsometry MonomialIsometry::linear_map(int d, std::vector<Point> rows) { return {BitWord(d), std::move(rows), 0}; }

Point MonomialIsometry::image(Point i) const { return apply_linear(lin_, i) ^ shift_; }

bool MonomialIsometry::linear_is_identity() const {
  for (std::size_t j = 0; j < lin_.size(); ++j)
    if (lin_[j] != Point{1} << j) return false;
  return true;
}

bool MonomialIsometry::in_brw() const { return cached_rm(2, d()).contains(sign_); }

bool MonomialIsometry::is_lower() const { return linear_is_identity() && cached_rm(1, d()).contains(sign_); }

DyadicVector MonomialIsometry::apply(const DyadicVector& x) const {
  require(x.d() == d(), Errc::mixed_ambient, "isometry and vector over different ambients");
  DyadicVector y(d());
  for (Point i = 0; i < static_cast<Point>(x.size()); ++i) {
    if (x[i].is_zero()) continue;
    y[image(i)] = sign_.test(i) ? -x[i] : x[i];
  }
  return y;
}

MonomialIsometry MonomialIsometry::operator*(const MonomialIsometry& h) const {
  require(h.d() == d(), Errc::mixed_ambient, "isometries over different ambients");
  MonomialIsometry out;
  out.sign_ = sign_;
  const Point n = Point{1} << d();
  for (Point i = 0; i < n; ++i)
    if (h.sign_.test(image(i))) out.sign_.flip(i);
  out.lin_.resize(lin_.size());
  for (std::size_t j = 0; j < lin_.size(); ++j) out.lin_[j] = apply_linear(h.lin_, lin_[j]);
  out.shift_ = h.image(shift_);
  return out;
}

MonomialIsometry MonomialIsometry::inverse() const {
  const Point n = Point{1} << d();
  std::vector<Point> pre(n);
  for (Point i = 0; i < n; ++i) pre[image(i)] = i;
  MonomialIsometry out;
  out.sign_ = BitWord(d());
  for (Point i = 0; i < n; ++i)
    if (sign_.test(i)) out.sign_.set(image(i));
  out.shift_ = pre[0];
  out.lin_.resize(lin_.size());
  for (std::size_t j = 0; j < lin_.size(); ++j) out.lin_[j] = pre[Point{1} << j] ^ out.shift_;
  return out;
}

MonomialIsometry MonomialIsometry::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  MonomialIsometry r = identity(d()), b = *this;
  for (; n; n >>= 1, b = b * b)
    if (n & 1) r = r * b;
  return r;
}

bool MonomialIsometry::is_involution() const { return (*this * *this) == identity(d()); }

long MonomialIsometry::trace() const {
  long t = 0;
  const Point n = Point{1} << d();
  for (Point i = 0; i < n; ++i)
    if (image(i) == i) t += sign_.test(i) ? -1 : 1;
  return t;
}

lat::IntMatrix MonomialIsometry::matrix() const {
  const std::size_t n = std::size_t{1} << d();
  lat::IntMatrix m(n, n);
  for (Point i = 0; i < n; ++i) m(i, image(i)) = sign_.test(i) ? -1 : 1;
  return m;
}

void check_hyperplane(const BitWord& h) {
  const int d = h.d();
  require(h.weight() == (1 << (d - 1)) && cached_rm(1, d).contains(h), Errc::precondition,
          "word is not an affine hyperplane");
}

Lattice apply(const MonomialIsometry& g, const Lattice& l) {
  require(g.d() == l.d(), Errc::mixed_ambient, "isometry and lattice over different ambients");
  const BitWord supp = l.support();
  BitWord img(l.d());
  for (Point p : supp.points()) img.set(g.image(p));
  lat::LatticeBuilder b(l.d(), l.scale(), l.modulus_hint(), l.modulus_hint() ? &img : nullptr);
  for (const auto& v : l.basis()) b.add(g.apply(v));
  return b.finish();
}

bool is_invariant(const Lattice& l, const MonomialIsometry& g) {
  for (const auto& v : l.basis())
    if (!l.contains(g.apply(v))) return false;
  return true;
}

lat::IntMatrix action_matrix(const Lattice& l, const MonomialIsometry& g) {
  const std::size_t r = l.rank();
  lat::IntMatrix m(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto c = l.coefficients(g.apply(l.basis_vector(i)));
    require(c.has_value(), Errc::not_invariant, "lattice is not invariant under the isometry");
    for (std::size_t j = 0; j < r; ++j) m(i, j) = (*c)[j];
  }
  return m;
}

int jordan_number(const Lattice& l, const MonomialIsometry& t) {
  require(t.is_involution(), Errc::precondition, "Jordan number needs an involution");
  lat::IntMatrix m = action_matrix(l, t);
  const std::size_t r = m.rows();
  const std::size_t words = (r + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(r, std::vector<std::uint64_t>(words));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const lat::Int e = m(i, j) - (i == j ? 1 : 0);
      if (mpz_odd_p(e.get_mpz_t())) rows[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  int rank = 0;
  for (std::size_t col = 0; col < r && static_cast<std::size_t>(rank) < r; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t p = static_cast<std::size_t>(rank);
    while (p < r && !(rows[p][w] & bit)) ++p;
    if (p == r) continue;
    std::swap(rows[p], rows[static_cast<std::size_t>(rank)]);
    for (std::size_t i = 0; i < r; ++i)
      if (i != static_cast<std::size_t>(rank) && (rows[i][w] & bit))
        for (std::size_t k = 0; k < words; ++k) rows[i][k] ^= rows[static_cast<std::size_t>(rank)][k];
    ++rank;
  }
  return rank;
}

}  // namespace bwc::brw
