#include "bwc/gf2/affine.hpp"

#include <algorithm>
#include <bit>

namespace bwc::gf2 {

namespace {

int top_bit(Point x) { return 31 - std::countl_zero(x); }

}  // namespace

LinearSpan::LinearSpan(int d, const std::vector<Point>& generators, bool require_independent) : d_(d) {
  check_dim(d);
  for (Point g : generators) {
    require(g < (Point{1} << d), Errc::precondition, "direction outside Omega");
    const bool grew = insert(g);
    if (require_independent) require(grew, Errc::precondition, "directions are linearly dependent");
  }
}

Point LinearSpan::reduce(Point x) const {
  for (Point b : basis_)
    if ((x >> top_bit(b)) & 1U) x ^= b;
  return x;
}

bool LinearSpan::insert(Point x) {
  x = reduce(x);
  if (x == 0) return false;
  const int p = top_bit(x);
  // keep the basis fully reduced
  for (Point& b : basis_)
    if ((b >> p) & 1U) b ^= x;
  basis_.push_back(x);
  std::sort(basis_.begin(), basis_.end(), [](Point a, Point b) { return top_bit(a) > top_bit(b); });
  pivot_mask_ |= Point{1} << p;
  return true;
}

AffineSubspace::AffineSubspace(int d, Point basepoint, const std::vector<Point>& directions)
    : directions_(d, directions, true) {
  require(basepoint < (Point{1} << d), Errc::precondition, "basepoint outside Omega");
  basepoint_ = directions_.reduce(basepoint);
}

AffineSubspace AffineSubspace::coordinate(int d, const std::vector<int>& fixed_bits, Point values) {
  check_dim(d);
  Point fixed_mask = 0;
  for (int b : fixed_bits) {
    require(b >= 0 && b < d, Errc::precondition, "coordinate index out of range");
    fixed_mask |= Point{1} << b;
  }
  std::vector<Point> dirs;
  for (int b = 0; b < d; ++b)
    if (!((fixed_mask >> b) & 1U)) dirs.push_back(Point{1} << b);
  return AffineSubspace(d, values & fixed_mask, dirs);
}

BitWord AffineSubspace::word() const {
  BitWord w(d());
  for (Point p : points()) w.set(p);
  return w;
}

std::vector<Point> AffineSubspace::points() const {
  const auto& dirs = directions();
  std::vector<Point> out;
  out.reserve(std::size_t{1} << dirs.size());
  for (std::uint32_t mask = 0; mask < (1U << dirs.size()); ++mask) {
    Point x = basepoint_;
    for (std::size_t j = 0; j < dirs.size(); ++j)
      if ((mask >> j) & 1U) x ^= dirs[j];
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_linear_subspace(int d, int m, const std::function<void(const std::vector<Point>&)>& f) {
  check_dim(d);
  if (m < 0 || m > d) return;
  // choose pivot positions p_0 > p_1 > ... > p_{m-1}
  std::vector<int> piv(static_cast<std::size_t>(m));
  std::vector<Point> basis(static_cast<std::size_t>(m));
  std::function<void(int, int)> choose_pivots;
  std::function<void(int, Point)> fill;

  fill = [&](int j, Point pivmask) {
    if (j == m) {
      f(basis);
      return;
    }
    const int p = piv[static_cast<std::size_t>(j)];
    std::vector<int> free_bits;
    for (int b = 0; b < p; ++b)
      if (!((pivmask >> b) & 1U)) free_bits.push_back(b);
    for (std::uint32_t sel = 0; sel < (1U << free_bits.size()); ++sel) {
      Point v = Point{1} << p;
      for (std::size_t q = 0; q < free_bits.size(); ++q)
        if ((sel >> q) & 1U) v |= Point{1} << free_bits[q];
      basis[static_cast<std::size_t>(j)] = v;
      fill(j + 1, pivmask);
    }
  };

  choose_pivots = [&](int j, int below) {
    if (j == m) {
      Point mask = 0;
      for (int p : piv) mask |= Point{1} << p;
      fill(0, mask);
      return;
    }
    for (int p = below - 1; p >= m - j - 1; --p) {
      piv[static_cast<std::size_t>(j)] = p;
      choose_pivots(j + 1, p);
    }
  };
  choose_pivots(0, d);
}

void for_each_affine_subspace(int d, int m, const std::function<void(const AffineSubspace&)>& f) {
  for_each_linear_subspace(d, m, [&](const std::vector<Point>& basis) {
    Point pivmask = 0;
    for (Point b : basis) pivmask |= Point{1} << top_bit(b);
    for (Point x = 0; x < (Point{1} << d); ++x)
      if ((x & pivmask) == 0) f(AffineSubspace(d, x, basis));
  });
}

std::uint64_t gaussian_binomial2(int d, int m) {
  if (m < 0 || m > d) return 0;
  std::uint64_t num = 1, den = 1;
  for (int i = 0; i < m; ++i) {
    num *= (std::uint64_t{1} << (d - i)) - 1;
    den *= (std::uint64_t{1} << (i + 1)) - 1;
  }
  return num / den;
}

}  // namespace bwc::gf2
