#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "bwc/cousins/cousins.hpp"
#include "bwc/error.hpp"

namespace bwc::cousins {

using gf2::BitWord;
using gf2::Point;

namespace {

// x -> x - ((x,r)/2) r for a root r of norm 4
DyadicVector reflect(const DyadicVector& x, const DyadicVector& r) {
  DyadicVector y = r;
  const Dyadic c = x.inner(r) * Dyadic::pow2(-1);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] *= c;
  return x - y;
}

// gamma as a word in reflections; block supports are disjoint, so the order
// across blocks does not matter
struct Word {
  std::vector<DyadicVector> roots;
  DyadicVector apply(DyadicVector x) const {
    for (const auto& r : roots) x = reflect(x, r);
    return x;
  }
  DyadicVector apply_inverse(DyadicVector x) const {
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) x = reflect(x, *it);
    return x;
  }
};

Lattice image(const Lattice& l, const Word& w) {
  std::vector<DyadicVector> gens;
  for (const auto& v : l.basis()) gens.push_back(w.apply(v));
  return lat::make_lattice(l.d(), gens);
}

// even unimodular overlattices of an even lattice with 2-elementary discriminant
std::vector<Lattice> overlattices(const Lattice& l) {
  const Lattice ld = lat::dual(l);
  const std::size_t n = ld.rank();
  // L inside L^# mod 2, in echelon form
  std::vector<std::vector<char>> rows;
  std::vector<std::size_t> piv;
  for (const auto& b : l.basis()) {
    const auto co = ld.coefficients(b);
    require(co.has_value(), Errc::internal, "lattice not inside its dual");
    std::vector<char> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = mpz_odd_p((*co)[j].get_mpz_t()) ? 1 : 0;
    for (std::size_t a = 0; a < rows.size(); ++a)
      if (r[piv[a]])
        for (std::size_t j = 0; j < n; ++j) r[j] ^= rows[a][j];
    std::size_t p = 0;
    while (p < n && !r[p]) ++p;
    if (p == n) continue;
    for (auto& q : rows)
      if (q[p])
        for (std::size_t j = 0; j < n; ++j) q[j] ^= r[j];
    rows.push_back(std::move(r));
    piv.push_back(p);
  }
  std::vector<DyadicVector> reps;
  for (std::size_t j = 0; j < n; ++j)
    if (std::find(piv.begin(), piv.end(), j) == piv.end()) reps.push_back(ld.basis_vector(j));
  const std::size_t m = reps.size();
  require(m % 2 == 0 && m <= 16, Errc::precondition, "discriminant is not small and 2-elementary");
  auto vec = [&](std::uint32_t mask) {
    DyadicVector x(l.d());
    for (std::size_t j = 0; j < m; ++j)
      if (mask >> j & 1) x += reps[j];
    return x;
  };
  std::vector<char> singular(std::size_t{1} << m);
  for (std::uint32_t x = 1; x < singular.size(); ++x) {
    const Dyadic q = vec(x).norm();
    singular[x] = q.is_integer() && mpz_even_p(q.mantissa().get_mpz_t());
  }
  // totally singular subspaces of dimension m/2, as sorted element lists
  std::set<std::vector<std::uint32_t>> found;
  std::vector<std::uint32_t> span{0};
  std::function<void(std::uint32_t)> grow = [&](std::uint32_t from) {
    if (span.size() == std::size_t{1} << (m / 2)) {
      auto s = span;
      std::sort(s.begin(), s.end());
      found.insert(std::move(s));
      return;
    }
    for (std::uint32_t x = from; x < singular.size(); ++x) {
      if (!singular[x] || std::find(span.begin(), span.end(), x) != span.end()) continue;
      bool ok = true;
      for (auto y : span)
        if (y && !singular[x ^ y]) ok = false;
      if (!ok) continue;
      const std::size_t k = span.size();
      for (std::size_t i = 0; i < k; ++i) span.push_back(span[i] ^ x);
      grow(x + 1);
      span.resize(k);
    }
  };
  grow(1);
  std::vector<Lattice> out;
  for (const auto& s : found) {
    std::vector<DyadicVector> gens = l.basis();
    for (auto x : s)
      if (x) gens.push_back(vec(x));
    out.push_back(lat::make_lattice(l.d(), gens));
  }
  return out;
}

struct Candidate {
  std::string name;
  Lattice l;
};

std::string describe(const Lattice& l) {
  std::ostringstream os;
  os << "rank " << l.rank();
  if (!lat::is_integral(l)) {
    os << ", not integral";
    return os.str();
  }
  os << ", det " << lat::det(l).str() << (lat::is_even(l) ? ", even" : ", odd");
  return os.str();
}

}  // namespace

LeechResult leech_cousin(std::uint64_t seed, int max_attempts, bool count_kissing) {
  const int d = 5;
  const auto sp = brw::standard_pair(d, 1);
  const auto& t = sp.t.t;
  const auto& f = sp.f.f;
  const Lattice& bw = bw::build_bw(d);
  const Lattice lplus = bw::eigenlattice(bw, t, 1);
  const Lattice pplus = bw::projected_lattice(bw, t, 1);

  LeechResult res;
  std::ostringstream diag;
  diag << "BW_5, t of defect 1 and trace " << sp.t.trace << ", L^+(t): " << describe(lplus) << "\n";

  // blocks: cosets of the core directions inside the +1 region
  const BitWord region = sp.t.z.complement();
  const auto& core = sp.t.core.direction_space();
  std::map<Point, BitWord> blocks;
  for (Point p : region.points()) {
    auto [it, fresh] = blocks.try_emplace(core.reduce(p), BitWord(d));
    it->second.set(p);
  }
  require(blocks.size() == 3, Errc::internal, "expected three blocks");

  lat::IntMatrix e8 = lat::e8_gram();
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) e8(i, j) *= 2;
  std::vector<Lattice> m, n;
  std::vector<std::vector<DyadicVector>> roots;
  lat::LatticeBuilder mb(d, bw.scale());
  for (const auto& [key, word] : blocks) {
    Lattice mi = lat::coordinate_section(bw, word);
    const auto g = lat::gram(mi);
    require(mi.rank() == 8 && g.integral() && lat::gram_isometric(g.integer(), e8).status == lat::IsoStatus::isometric,
            Errc::internal, "block sublattice is not sqrt(2) E8");
    require(brw::is_invariant(mi, f), Errc::internal, "f does not fix the block");
    std::vector<DyadicVector> rs;
    for (const auto& p : lat::enumerate_short(mi, 4).pairs) {
      rs.push_back(p.v);
      rs.push_back(-p.v);
    }
    mb.add(mi);
    n.push_back(bw::commutator_sublattice(mi, f));
    m.push_back(std::move(mi));
    roots.push_back(std::move(rs));
  }
  diag << "M = M_1 + M_2 + M_3, each sqrt(2) E8 with " << roots[0].size() << " roots; |L^+(t) : M| = "
       << lat::index_in(mb.finish(), lplus).get_str() << "\n";

  std::mt19937_64 rng(seed);
  std::map<std::string, std::map<std::string, int>> outcomes;
  for (int attempt = 0; attempt < max_attempts && !res.found; ++attempt) {
    ++res.attempts;
    Word w;
    bool good = true;
    for (std::size_t b = 0; b < 3 && good; ++b) {
      // random reflection word on block b until M_b(f-1) and its image are complementary
      bool hit = false;
      for (int tries = 0; tries < 64 && !hit; ++tries) {
        Word wb;
        std::uniform_int_distribution<std::size_t> pick(0, roots[b].size() - 1);
        for (int r = 0; r < 24; ++r) wb.roots.push_back(roots[b][pick(rng)]);
        const Lattice img = image(n[b], wb);
        if (lat::intersect(n[b], img) == m[b].scaled_pow2(1)) {
          w.roots.insert(w.roots.end(), wb.roots.begin(), wb.roots.end());
          hit = true;
        }
      }
      good = hit;
    }
    if (!good) {
      ++outcomes["gamma"]["no complementary image"];
      continue;
    }
    // g = gamma^{-1} f gamma
    auto g = [&](const DyadicVector& x) { return w.apply(f.apply(w.apply_inverse(x))); };
    std::vector<DyadicVector> lit, single, mixed, moved;
    for (const auto& y : pplus.basis()) {
      const DyadicVector y1 = g(y) - y;
      single.push_back(y1);
      lit.push_back(g(y1) - y1);  // y(g - 1)^2
      const DyadicVector z = f.apply(y) - y;
      mixed.push_back(g(z) - z);  // y(f - 1)(g - 1)
      moved.push_back(w.apply(z));  // y(f - 1)gamma
    }
    std::vector<Candidate> cands;
    for (auto [name, gens] : {std::pair{"L^+ + P^+(L)(g-1)^2", &lit}, {"L^+ + P^+(L)(g-1)", &single},
                              {"L^+ + P^+(L)(f-1)(g-1)", &mixed}, {"L^+ + P^+(L)(f-1)gamma", &moved}}) {
      auto all = *gens;
      for (const auto& v : lplus.basis()) all.push_back(v);
      cands.push_back({name, lat::make_lattice(d, all)});
    }
    for (const auto& c : cands) {
      const std::string desc = describe(c.l);
      ++outcomes[c.name][desc];
      if (c.l.rank() != 24 || !lat::is_integral(c.l) || !lat::is_even(c.l) || lat::det(c.l) != Dyadic(1)) continue;
      const auto mn = lat::min_norm(c.l);
      ++outcomes[c.name]["min norm " + mn.norm.str()];
      if (mn.norm != Dyadic(4)) continue;
      res.found = true;
      res.lattice = c.l;
      res.method = c.name;
      diag << "success with " << c.name << " at attempt " << res.attempts << "\n";
      break;
    }
  }
  for (const auto& [name, m2] : outcomes) {
    diag << name << ":";
    for (const auto& [k, v] : m2) diag << " [" << k << "] x" << v;
    diag << "\n";
  }
  if (!res.found) diag << "no formula candidate reached an even unimodular lattice of minimum 4\n";

  // every even unimodular overlattice of L^+(t)
  const auto ov = overlattices(lplus);
  res.overlattices = ov.size();
  const Lattice mc = mc1(d, 1, 1).lattice;
  bool has_mc = false;
  for (const auto& o : ov) {
    if (o == mc) has_mc = true;
    if (lat::enumerate_short(o, Dyadic(2)).total > 0) continue;
    if (++res.rootless == 1 && !res.found) {
      res.found = true;
      res.lattice = o;
      res.method = "rootless even unimodular overlattice of L^+(t)";
    }
  }
  diag << "even unimodular overlattices of L^+(t): " << res.overlattices << ", without roots: " << res.rootless
       << (has_mc ? ", MC_1(5,1,+) among them" : ", MC_1(5,1,+) missing") << "\n";
  if (res.found) {
    res.even = lat::is_even(res.lattice);
    res.unimodular = lat::det(res.lattice) == Dyadic(1);
    res.min_norm = lat::min_norm(res.lattice).norm;
    if (count_kissing) res.kissing = lat::enumerate_short(res.lattice, *res.min_norm).total;
  }
  res.diagnostics = diag.str();
  return res;
}

}  // namespace bwc::cousins
