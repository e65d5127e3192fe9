#include "bwc/cousins/cousins.hpp"

#include "bwc/error.hpp"

namespace bwc::cousins {

Lattice mc(const Lattice& l, const MonomialIsometry& t, const MonomialIsometry& f, int eps) {
  require(eps == 1 || eps == -1, Errc::precondition, "eps must be +1 or -1");
  require(t.is_involution(), Errc::precondition, "t must be an involution");
  require(f * f == MonomialIsometry::minus_one(l.d()), Errc::precondition, "f must square to -1");
  require(t * f == f * t, Errc::precondition, "t and f must commute");
  require(brw::is_invariant(l, t) && brw::is_invariant(l, f), Errc::not_invariant,
          "lattice must be invariant under t and f");
  lat::LatticeBuilder b(l.d(), l.scale() + 1);
  b.add(bw::eigenlattice(l, t, eps));
  for (const auto& v : bw::projected_lattice(l, t, eps).basis()) b.add(f.apply(v) - v);
  Lattice out = b.finish();
  require(lat::is_integral(out), Errc::internal, "cousin lattice is not integral");
  return out;
}

std::size_t cousin_rank(int d, int k, int eps) {
  const std::size_t a = std::size_t{1} << (d - 1), b = std::size_t{1} << (d - k - 1);
  return eps > 0 ? a + b : a - b;
}

CousinSpec mc1_with(int d, int k, int eps, const brw::FourvolutionSpec& f) {
  require(eps == 1 || eps == -1, Errc::precondition, "eps must be +1 or -1");
  const auto sp = brw::standard_pair(d, k);
  CousinSpec c;
  c.d = d;
  c.k = k;
  c.eps = eps;
  c.t = sp.t;
  c.f = f;
  c.region = eps > 0 ? sp.t.z.complement() : sp.t.z;
  c.lattice = mc(bw::build_bw(d), c.t.t, f.f, eps);
  return c;
}

CousinSpec mc1(int d, int k, int eps) { return mc1_with(d, k, eps, brw::standard_pair(d, k).f); }

}  // namespace bwc::cousins
