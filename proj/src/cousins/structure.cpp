#include <numeric>
#include <random>

#include "bwc/cousins/cousins.hpp"
#include "bwc/error.hpp"

namespace bwc::cousins {

using gf2::BitWord;
using gf2::Point;
using lat::Int;

namespace {

void check_level1_range(int d, int k) {
  require(d % 2 == 1 && d - 2 * k >= 3, Errc::size, "level-1 analysis needs d odd and d - 2k >= 3");
}

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { p[find(a)] = find(b); }
};

// Membership in a unimodular lattice whose span is the coordinate subspace
// `region`: x is in L iff every (x, b_j) is an integer.
class UnimodularTest {
 public:
  explicit UnimodularTest(const Lattice& l) : d_(l.d()), s_(l.scale()) {
    const auto& b = l.int_basis();
    rows_.resize(b.rows(), std::vector<std::int64_t>(b.cols()));
    for (std::size_t j = 0; j < b.rows(); ++j)
      for (std::size_t i = 0; i < b.cols(); ++i) rows_[j][i] = mpz_fdiv_ui(b(j, i).get_mpz_t(), 1UL << 20);
  }
  // x = 2^{-m} sum c_i v_i over `pts`; (x, b_j) = 2^{floor(d/2) - m - s} sum c_i B_ji
  bool contains(const std::vector<Point>& pts, const std::vector<int>& c, int m) const {
    const int q = m + s_ - d_ / 2;
    if (q <= 0) return true;
    const std::int64_t mask = (std::int64_t{1} << q) - 1;
    for (const auto& row : rows_) {
      std::int64_t acc = 0;
      for (std::size_t a = 0; a < pts.size(); ++a) acc += c[a] * row[pts[a]];
      if (acc & mask) return false;
    }
    return true;
  }

 private:
  int d_, s_;
  std::vector<std::vector<std::int64_t>> rows_;
};

bool unimodular_on_region(const CousinSpec& c) {
  return lat::det(c.lattice) == Dyadic(1) && c.lattice.rank() == static_cast<std::size_t>(c.region.weight());
}

}  // namespace

Level1Census level1_short_vectors(int d, int k, int eps, bool all_pairs) {
  check_level1_range(d, k);
  return level1_short_vectors(mc1(d, k, eps), all_pairs);
}

Level1Census level1_short_vectors(const CousinSpec& c, bool all_pairs) {
  check_level1_range(c.d, c.k);
  const int d = c.d;
  const Lattice& l = c.lattice;
  Level1Census out;
  const auto pts = c.region.points();
  out.all_pairs = all_pairs;
  const gf2::LinearSpan& core = c.t.core.direction_space();
  for (Point i : pts) {
    ++out.candidates;
    if (l.contains(DyadicVector::unit(d, i).mul_pow2(-1))) out.no_half_units = false;
  }
  const Dyadic want = Dyadic::pow2((d - 1) / 2 - 1);
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      const Point i = pts[a], j = pts[b];
      const bool on_core = core.contains(i ^ j);
      if (!all_pairs && !on_core) continue;
      for (int sg : {1, -1}) {
        ++out.candidates;
        DyadicVector x = DyadicVector::unit(d, i);
        if (sg > 0) {
          x += DyadicVector::unit(d, j);
        } else {
          x -= DyadicVector::unit(d, j);
        }
        x.mul_pow2(-1);
        if (!l.contains(x)) continue;
        if (!on_core) {
          ++out.off_core;
          continue;
        }
        if (x.norm() != want) out.all_minimal_norm = false;
        out.vectors.push_back(-x);
        out.vectors.push_back(std::move(x));
      }
    }
  std::sort(out.vectors.begin(), out.vectors.end());

  // nonorthogonality classes; for roots of D_n, n >= 3, these are the
  // components of the support graph
  const std::size_t n = out.vectors.size();
  UnionFind uf(n);
  std::map<Point, std::size_t> first;
  for (std::size_t a = 0; a < n; ++a)
    for (Point p = 0; p < out.vectors[a].size(); ++p) {
      if (out.vectors[a][p].is_zero()) continue;
      auto [it, fresh] = first.try_emplace(p, a);
      if (!fresh) uf.join(it->second, a);
    }
  std::map<std::size_t, std::vector<DyadicVector>> classes;
  for (std::size_t a = 0; a < n; ++a) classes[uf.find(a)].push_back(out.vectors[a]);
  const int dn = 1 << (d - 2 * c.k);
  lat::IntMatrix dg = lat::d_gram(dn);
  // roots of norm 2 scaled to norm 2^{delta-1}
  const Int f = Int(1) << ((d - 1) / 2 - 2);
  for (std::size_t i = 0; i < dg.rows(); ++i)
    for (std::size_t j = 0; j < dg.cols(); ++j) dg(i, j) *= f;
  for (auto& [root, vs] : classes) {
    Lattice comp = lat::make_lattice(d, vs);
    const auto g = lat::gram(comp);
    lat::IsoStatus st = lat::IsoStatus::not_isometric;
    if (g.integral()) st = lat::gram_isometric(g.integer(), dg).status;
    out.components.push_back(std::move(comp));
    out.component_is_scaled_d.push_back(st);
  }
  return out;
}

IndecomposabilityReport indecomposability_evidence(int d, int k, int eps) {
  IndecomposabilityReport r;
  r.d = d;
  r.k = k;
  r.eps = eps;
  if (k == 1) {
    r.note = eps < 0 ? "k = 1: MC_1(d,1,-) is isometric to BW_{d-2}; no indecomposability claim"
                     : "k = 1: MC_1(d,1,+) splits as BW_{d-2} + BW_{d-2} + BW_{d-2}";
    return r;
  }
  r.applicable = d >= 7 && d % 2 == 1 && k >= 2 && d - 2 * k >= 5;
  require(d % 2 == 1 && d - 2 * k >= 3, Errc::size, "indecomposability evidence needs d odd and d - 2k >= 3");
  if (!r.applicable) r.note = "partial evidence: d - 2k < 5";
  const CousinSpec c = mc1(d, k, eps);
  const auto census = level1_short_vectors(c);
  r.components = census.components.size();

  // v = 2^{-delta} v_H, H = {x_d = 0} transverse to the core (it moves e_d)
  const int delta = (d - 1) / 2;
  BitWord h(d);
  for (Point x = 0; x < (Point{1} << (d - 1)); ++x) h.set(x);
  const DyadicVector v = DyadicVector::from_word(h, delta);
  const DyadicVector pv = bw::project(v, c.t.t, eps);
  r.pv_norm = pv.norm();
  r.r = r.pv_norm * Dyadic::pow2(-delta);
  const DyadicVector w = c.f.f.apply(pv) - pv;
  r.w_norm = w.norm();
  // every indecomposable summand of w has norm at least 2^{delta-1}
  const Dyadic s = r.w_norm * Dyadic::pow2(1 - delta);
  mpz_class q = s.mantissa();
  if (s.exponent() > 0) {
    mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), static_cast<mp_bitcnt_t>(s.exponent()));
  } else {
    q <<= static_cast<mp_bitcnt_t>(-s.exponent());
  }
  r.s = static_cast<int>(q.get_si());
  r.w_in_lattice = c.lattice.contains(w);
  for (const auto& comp : census.components) {
    bool touch = false;
    for (const auto& b : comp.basis())
      if (!w.inner(b).is_zero()) touch = true;
    if (touch) ++r.components_touched;
  }
  r.connected = r.w_in_lattice && r.s >= 1 && r.s <= 3 && r.components >= 4 && r.components_touched == r.components;
  if (r.note.empty())
    r.note = r.connected ? "w meets every level-1 component and splits into at most 3 indecomposables"
                         : "connectivity argument does not go through";
  return r;
}

TopFormReport top_form_check_level(const CousinSpec& c, int level, std::size_t samples, std::uint64_t seed) {
  const int d = c.d;
  TopFormReport rep;
  const Lattice lm = lat::level_sublattice(c.lattice, lat::standard_lattice(d), level);
  if (lm.rank() == 0) return rep;
  const gf2::Code rm = gf2::build_rm(d - 2 * level + 1, d);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-3, 3);
  std::size_t tries = 0;
  while (rep.samples < samples && tries < 50 * samples + 100) {
    ++tries;
    std::vector<Int> co(lm.rank());
    for (auto& x : co) x = coef(rng);
    const DyadicVector x = lm.combination(co);
    if (x.is_zero()) continue;
    const auto lt = lat::level_and_top(x);
    if (lt.level != level) continue;
    ++rep.samples;
    ++rep.by_level[level];
    BitWord b(d);
    for (Point i = 0; i < lt.top.size(); ++i)
      if (!lt.top[i].is_zero()) b.set(i);
    if (!rm.contains(b)) rep.counterexamples.push_back(x);
  }
  return rep;
}

TopFormReport top_form_check(const CousinSpec& c, std::size_t samples, std::uint64_t seed) {
  TopFormReport rep;
  const int top = c.lattice.scale();
  for (int m = 0; m <= top; ++m) {
    const std::size_t share = samples / static_cast<std::size_t>(top + 1) + (static_cast<std::size_t>(m) < samples % static_cast<std::size_t>(top + 1) ? 1 : 0);
    auto r = top_form_check_level(c, m, share, seed + static_cast<std::uint64_t>(m));
    rep.samples += r.samples;
    for (auto [lv, n] : r.by_level) rep.by_level[lv] += n;
    for (auto& x : r.counterexamples) rep.counterexamples.push_back(std::move(x));
  }
  return rep;
}

Level2Census level2_census(const CousinSpec& c, std::size_t probes, std::uint64_t seed) {
  const int d = c.d;
  require(d >= 3, Errc::size, "level-2 census needs d >= 3");
  require(unimodular_on_region(c), Errc::precondition, "level-2 census needs a unimodular cousin");
  const UnimodularTest ut(c.lattice);
  Level2Census out;
  std::vector<int> signs(8);
  gf2::for_each_affine_subspace(d, 3, [&](const gf2::AffineSubspace& a) {
    const BitWord w = a.word();
    if (!(w & c.region.complement()).empty()) return;
    ++out.flats;
    const auto pts = a.points();
    // first sign fixed to + (one per +- pair)
    for (unsigned mask = 0; mask < 128; ++mask) {
      signs[0] = 1;
      for (int b = 0; b < 7; ++b) signs[static_cast<std::size_t>(b) + 1] = (mask >> b & 1U) ? -1 : 1;
      if (!ut.contains(pts, signs, 2)) continue;
      BitWord neg(d);
      for (std::size_t b = 0; b < 8; ++b)
        if (signs[b] < 0) neg.set(pts[b]);
      out.affine_vectors.push_back(DyadicVector::from_word(w, 2, &neg));
    }
  });
  std::sort(out.affine_vectors.begin(), out.affine_vectors.end());

  // other shapes of norm 2^{delta - 1} at level 2: eight +-1/4 on a non-flat,
  // or four +-1/4 and one +-1/2
  const auto region = c.region.points();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, region.size() - 1);
  for (std::size_t p = 0; p < probes; ++p) {
    const bool eight = p % 2 == 0;
    const std::size_t n = eight ? 8 : 5;
    std::vector<Point> pts;
    while (pts.size() < n) {
      const Point q = region[pick(rng)];
      if (std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(q);
    }
    std::vector<int> cs(n);
    for (std::size_t b = 0; b < n; ++b) cs[b] = (rng() & 1U) ? -1 : 1;
    if (!eight) cs[4] *= 2;
    ++out.probes;
    if (!ut.contains(pts, cs, 2)) continue;
    if (eight) {
      gf2::LinearSpan sp(d, {});
      for (auto q : pts)
        if (q != pts[0]) sp.insert(q ^ pts[0]);
      if (sp.dimension() == 3) continue;  // an affine 3-space after all
    }
    DyadicVector x(d);
    for (std::size_t b = 0; b < n; ++b) x[pts[b]] = Dyadic(cs[b]) * Dyadic::pow2(-2);
    out.other_shapes.push_back(std::move(x));
  }
  return out;
}

}  // namespace bwc::cousins
