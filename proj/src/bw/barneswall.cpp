#include "bwc/bw/barneswall.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "bwc/linalg/matrix.hpp"

namespace bwc::bw {

using gf2::BitWord;
using gf2::Point;
using lat::Int;

namespace {

Lattice closure_bw(int d) {
  const int s = d / 2;
  std::vector<MonomialIsometry> gens;
  for (int j = 0; j < d; ++j) gens.push_back(MonomialIsometry::translation(d, Point{1} << j));
  if (d >= 2) {
    std::vector<Point> swap12, cycle, transvect;
    for (int j = 0; j < d; ++j) {
      swap12.push_back(Point{1} << j);
      cycle.push_back(Point{1} << ((j + 1) % d));
      transvect.push_back(Point{1} << j);
    }
    std::swap(swap12[0], swap12[1]);
    transvect[1] |= 1U;  // e_2 -> e_1 + e_2
    gens.push_back(MonomialIsometry::linear_map(d, swap12));
    gens.push_back(MonomialIsometry::linear_map(d, cycle));
    gens.push_back(MonomialIsometry::linear_map(d, transvect));
  }
  // v_i lies in BW_d, so 2^s e_i does at scale s
  lat::LatticeBuilder b(d, s, Int(1) << s);
  for (int m = 0; 2 * m <= d; ++m) {
    BitWord a(d);
    for (Point x = 0; x < (Point{1} << (2 * m)); ++x) a.set(x);
    b.add(DyadicVector::from_word(a, m));
  }
  Lattice l = b.finish();
  for (;;) {
    bool grew = false;
    for (const auto& v : l.basis())
      for (const auto& g : gens) {
        auto y = g.apply(v);
        if (!l.contains(y)) {
          b.add(y);
          grew = true;
        }
      }
    if (!grew) return l;
    l = b.finish();
  }
}

BitWord functional_word(int d, Point a) {
  BitWord w(d);
  for (Point x = 0; x < (Point{1} << d); ++x)
    if (std::popcount(a & x) & 1) w.set(x);
  return w;
}

std::vector<DyadicVector> signed_flat_vectors(int d, int extra) {
  gf2::check_dim(d);
  require(d <= 5, Errc::size, "minimal vector sets are materialised for d <= 5");
  const auto rm2 = gf2::build_rm(2, d);
  std::vector<DyadicVector> out;
  for (int m = 0; 2 * m + extra <= d; ++m)
    gf2::for_each_affine_subspace(d, 2 * m + extra, [&](const gf2::AffineSubspace& a) {
      const BitWord aw = a.word();
      std::vector<BitWord> gens;
      for (const auto& s : rm2.basis()) gens.push_back(s & aw);
      for (const auto& w : gf2::Code::span(d, gens).words()) out.push_back(DyadicVector::from_word(aw, m, &w));
    });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_invariant(const Lattice& l, const MonomialIsometry& g) {
  require(brw::is_invariant(l, g), Errc::not_invariant, "lattice is not invariant under the isometry");
}

}  // namespace

const Lattice& build_bw(int d) {
  gf2::check_dim(d);
  static std::mutex mu;
  static std::map<int, Lattice> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, closure_bw(d)).first;
  return it->second;
}

std::vector<DyadicVector> standard_minimal_vectors(int d) { return signed_flat_vectors(d, 0); }

std::vector<DyadicVector> bw_twist_minvecs(int d) { return signed_flat_vectors(d, 1); }

Lattice twist(const Lattice& l, int p, const MonomialIsometry& f) {
  require(p >= 0, Errc::precondition, "twist exponent must be nonnegative");
  Lattice out = l;
  for (int i = 0; i < p; ++i) out = commutator_sublattice(out, f);
  return out;
}

DyadicVector project(const DyadicVector& x, const MonomialIsometry& t, int eps) {
  require(eps == 1 || eps == -1, Errc::precondition, "eps must be +1 or -1");
  DyadicVector y = t.apply(x);
  if (eps < 0) y = -y;
  y += x;
  return y.mul_pow2(-1);
}

Lattice eigenlattice(const Lattice& l, const MonomialIsometry& t, int eps) {
  require(eps == 1 || eps == -1, Errc::precondition, "eps must be +1 or -1");
  require(t.is_involution(), Errc::precondition, "eigenlattice needs an involution");
  if (t.is_diagonal()) return lat::coordinate_section(l, eps > 0 ? t.sign().complement() : t.sign());
  lat::IntMatrix m = brw::action_matrix(l, t);
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= eps;
  const lat::IntMatrix k = linalg::integer_kernel(m);
  lat::LatticeBuilder b(l.d(), l.scale());
  for (std::size_t i = 0; i < k.rows(); ++i) b.add(l.combination(k.row_vector(i)));
  return b.finish();
}

Lattice projected_lattice(const Lattice& l, const MonomialIsometry& t, int eps) {
  require(t.is_involution(), Errc::precondition, "projection needs an involution");
  if (t.is_diagonal()) return lat::coordinate_projection(l, eps > 0 ? t.sign().complement() : t.sign());
  lat::LatticeBuilder b(l.d(), l.scale() + 1);
  for (const auto& v : l.basis()) b.add(project(v, t, eps));
  return b.finish();
}

EigenData eigen_data(const Lattice& l, const MonomialIsometry& t) {
  EigenData e{eigenlattice(l, t, 1), eigenlattice(l, t, -1), Lattice(l.d())};
  e.tel = lat::sum(e.plus, e.minus);
  return e;
}

Lattice commutator_sublattice(const Lattice& l, const MonomialIsometry& g) {
  require_invariant(l, g);
  lat::LatticeBuilder b(l.d(), l.scale());
  for (const auto& v : l.basis()) b.add(g.apply(v) - v);
  return b.finish();
}

Lattice lower_commutator(const Lattice& l) {
  const int d = l.d();
  std::vector<MonomialIsometry> gens{MonomialIsometry::minus_one(d)};
  for (int j = 0; j < d; ++j) {
    gens.push_back(MonomialIsometry::sign_change(functional_word(d, Point{1} << j)));
    gens.push_back(MonomialIsometry::translation(d, Point{1} << j));
  }
  lat::LatticeBuilder b(d, l.scale());
  for (const auto& g : gens) {
    require_invariant(l, g);
    for (const auto& v : l.basis()) b.add(g.apply(v) - v);
  }
  return b.finish();
}

bool check_two_four(const Lattice& l, const brw::DihedralPair& p) {
  brw::check_dihedral(p);
  require_invariant(l, p.u);
  require_invariant(l, p.v);
  return lat::sum(eigenlattice(l, p.u, 1), eigenlattice(l, p.v, 1)) == l;
}

std::optional<TopClosureWitness> find_top_closure_failure(int d, int max_pairs) {
  gf2::check_dim(d);
  require(d >= 8, Errc::size, "two 4-spaces meeting in a point need d >= 8");
  const Lattice& l = build_bw(d);
  BitWord a(d);
  for (Point x = 0; x < 16; ++x) a.set(x);
  const gf2::LinearSpan adir(d, {1, 2, 4, 8});
  std::optional<TopClosureWitness> found;
  int tried = 0;
  gf2::for_each_linear_subspace(d, 4, [&](const std::vector<Point>& basis) {
    if (found || tried >= max_pairs) return;
    gf2::LinearSpan both = adir;
    for (Point p : basis)
      if (!both.insert(p)) return;  // A and B share a direction
    ++tried;
    const gf2::AffineSubspace b(d, 0, basis);
    DyadicVector x = DyadicVector::from_word(a, 2) + DyadicVector::from_word(b.word(), 2);
    TopClosureWitness w;
    w.x_in_lattice = l.contains(x);
    w.top = lat::level_and_top(x).top;
    w.top_in_lattice = l.contains(w.top);
    w.x = std::move(x);
    if (!w.x_in_lattice || w.top_in_lattice) return;
    w.description = "A = span(e1..e4), B = span(";
    for (std::size_t i = 0; i < basis.size(); ++i) w.description += (i ? ", " : "") + std::to_string(basis[i]);
    w.description += "), A meet B = {0}; x = (v_A + v_B)/4 in BW_" + std::to_string(d) +
                     ", top(x) = v_{A+B}/4 not in BW_" + std::to_string(d);
    found = std::move(w);
  });
  return found;
}

}  // namespace bwc::bw
