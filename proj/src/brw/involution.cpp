#include "bwc/brw/involution.hpp"

#include <functional>
#include <sstream>

namespace bwc::brw {

namespace {

int parity(Point x) { return std::popcount(x) & 1; }

// epsilon of the affine hyperplane {x : a.x = 1}
BitWord functional_word(int d, Point a) {
  BitWord w(d);
  for (Point x = 0; x < (Point{1} << d); ++x)
    if (parity(a & x)) w.set(x);
  return w;
}

}  // namespace

InvolutionSpec make_involution(const gf2::CubiDecomposition& cubi) {
  InvolutionSpec s;
  s.d = cubi.word.d();
  s.k = static_cast<int>(cubi.parts.size());
  s.z = cubi.word;
  s.t = MonomialIsometry::sign_change(cubi.word);
  s.core = cubi.core;
  s.trace = s.t.trace();
  require(s.trace == (1L << (s.d - s.k)), Errc::internal, "involution trace is not 2^{d-k}");
  return s;
}

FourvolutionSpec make_fourvolution(const BitWord& h, Point c) {
  check_hyperplane(h);
  require(c != 0, Errc::precondition, "fourvolution needs a nonzero translation");
  require(h.translate(c) == h.complement(), Errc::precondition, "hyperplane contains a translate of c");
  FourvolutionSpec f{h, c, MonomialIsometry::sign_change(h) * MonomialIsometry::translation(h.d(), c)};
  require(f.f * f.f == MonomialIsometry::minus_one(h.d()), Errc::internal, "f^2 != -1");
  return f;
}

FourvolutionSpec standard_fourvolution(int d) {
  gf2::check_dim(d);
  return make_fourvolution(gf2::AffineSubspace::coordinate(d, {d - 1}, 0).word(), Point{1} << (d - 1));
}

StandardPair standard_pair(int d, int k) {
  gf2::check_dim(d);
  require(k >= 1 && 2 * k <= d, Errc::size, "standard pair needs 1 <= k <= floor(d/2)");
  require(d - 2 * k >= 1, Errc::precondition, "core is a point: no core translation for f");
  StandardPair p;
  p.t = make_involution(gf2::cubi_codeword(d, k));
  const Point c = Point{1} << (d - 1);
  require(p.t.core.contains(c), Errc::internal, "c is not a core point");
  p.f = standard_fourvolution(d);
  const auto one = MonomialIsometry::identity(d);
  require(p.t.t * p.t.t == one, Errc::internal, "t^2 != 1");
  require(p.t.t * p.f.f == p.f.f * p.t.t, Errc::internal, "t and f do not commute");
  return p;
}

FourvolutionSpec alternate_fourvolution(const InvolutionSpec& t) {
  const int d = t.d;
  require(d - 2 * t.k >= 1, Errc::precondition, "core is a point: no core translation for f");
  Point c = Point{1} << (d - 1);
  if (d - 2 * t.k >= 2) c |= Point{1} << (d - 2);
  require(t.core.contains(c), Errc::internal, "c is not a core point");
  // H = {x_1 + x_d = 1}
  auto f = make_fourvolution(functional_word(d, 1U | (Point{1} << (d - 1))), c);
  require(t.t * f.f == f.f * t.t, Errc::internal, "t and f do not commute");
  return f;
}

void check_dihedral(const DihedralPair& p) {
  const int d = p.u.d();
  const auto one = MonomialIsometry::identity(d);
  require(p.u != one && p.u.is_involution(), Errc::group_shape, "u is not an involution");
  require(p.v != one && p.v.is_involution(), Errc::group_shape, "v is not an involution");
  const auto w = p.u * p.v;
  require(w * w == MonomialIsometry::minus_one(d), Errc::group_shape, "(uv)^2 != -1: not dihedral of order 8 with centre -1");
}

DihedralPair lower_dihedral_pair(const FourvolutionSpec& f) {
  DihedralPair p{MonomialIsometry::sign_change(f.h), MonomialIsometry::translation(f.h.d(), f.c)};
  check_dihedral(p);
  return p;
}

bool is_split(const MonomialIsometry& t) {
  require(t.is_involution(), Errc::precondition, "split test needs an involution");
  const int d = t.d();
  require(d <= 4, Errc::size, "split test runs for d <= 4");
  const Point n = Point{1} << d;
  const auto tinv = t.inverse();
  // R/Z as pairs (a, c) <-> eps_{a.x = 1} tau_c, packed as a | c << d
  std::vector<std::uint32_t> cent;
  for (Point a = 0; a < n; ++a) {
    const auto ea = MonomialIsometry::sign_change(functional_word(d, a));
    for (Point c = 0; c < n; ++c) {
      const auto x = ea * MonomialIsometry::translation(d, c);
      if (tinv * x * t == x) cent.push_back(a | (c << d));
    }
  }
  auto q = [&](std::uint32_t v) { return parity((v & (n - 1)) & (v >> d)); };
  auto b = [&](std::uint32_t v, std::uint32_t w) {
    return parity((v & (n - 1)) & (w >> d)) ^ parity((w & (n - 1)) & (v >> d));
  };
  std::vector<std::uint32_t> chosen;
  gf2::LinearSpan span(2 * d, {});
  std::function<bool(std::size_t)> dfs = [&](std::size_t from) -> bool {
    if (static_cast<int>(chosen.size()) == d) return true;
    for (std::size_t i = from; i < cent.size(); ++i) {
      const auto v = cent[i];
      if (v == 0 || q(v) || span.contains(v)) continue;
      bool ok = true;
      for (auto w : chosen) ok = ok && !b(v, w);
      if (!ok) continue;
      const auto saved = span;
      span.insert(v);
      chosen.push_back(v);
      if (dfs(i + 1)) return true;
      chosen.pop_back();
      span = saved;
    }
    return false;
  };
  return dfs(0);
}

std::optional<NonsplitWitness> find_nonsplit_involution(int d) {
  gf2::check_dim(d);
  require(d >= 2 && d <= 4, Errc::size, "nonsplit search runs for 2 <= d <= 4");
  const Point n = Point{1} << d;
  const auto rm2 = gf2::build_rm(2, d).words();
  const auto id = MonomialIsometry::identity(d);
  std::vector<Point> rows(static_cast<std::size_t>(d));
  std::optional<NonsplitWitness> found;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (found) return;
    if (j < rows.size()) {
      for (Point r = 1; r < n && !found; ++r) {
        rows[j] = r;
        rec(j + 1);
      }
      return;
    }
    if (gf2::LinearSpan(d, rows).dimension() != d) return;
    const auto lin = MonomialIsometry::linear_map(d, rows);
    if (!(lin * lin == id)) return;
    for (Point b = 0; b < n && !found; ++b) {
      if (lin.image(b) != b) continue;  // (x A + b) A + b = x needs b A = b
      if (lin.linear_is_identity() && b == 0) continue;  // diagonal: centralises the diagonal subgroup
      const auto perm = lin * MonomialIsometry::translation(d, b);
      for (const auto& s : rm2) {
        const auto g = MonomialIsometry::sign_change(s) * perm;
        if (!g.is_involution() || g.is_lower()) continue;
        if (is_split(g)) continue;
        std::ostringstream os;
        os << "eps_S * (x -> xA + b) with S = " << s.hex() << ", A rows = [";
        for (std::size_t i = 0; i < rows.size(); ++i) os << (i ? ", " : "") << rows[i];
        os << "], b = " << b << ", trace " << g.trace();
        found = NonsplitWitness{g, os.str()};
        return;
      }
    }
  };
  rec(0);
  return found;
}

}  // namespace bwc::brw
