#include "bwc/lattice/analysis.hpp"

#include <algorithm>
#include <numeric>

namespace bwc::lat {

std::vector<Int> discriminant_group(const Lattice& l) {
  const GramMatrix g = gram(l);
  std::vector<Int> out;
  for (const auto& f : linalg::snf(g.integer()))
    if (f > 1) out.push_back(f);
  return out;
}

namespace {

std::vector<std::int64_t> to_i64(const DyadicVector& v, int scale) {
  const auto ints = v.to_ints(scale);
  std::vector<std::int64_t> out(ints.size());
  for (std::size_t i = 0; i < ints.size(); ++i) {
    require(ints[i].fits_slong_p(), Errc::internal, "coordinate overflow");
    out[i] = ints[i].get_si();
  }
  return out;
}

std::int64_t dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}


constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

struct Group {
  std::vector<std::size_t> members;
  std::vector<std::vector<std::int64_t>> probes;
  std::vector<std::vector<std::uint64_t>> echelon;  // mod p, each row with a leading 1
  std::vector<std::size_t> lead;

  bool touches(const std::vector<std::int64_t>& x) const {
    for (const auto& p : probes)
      if (dot(x, p) != 0) return true;
    return false;
  }
  bool insert(const std::vector<std::int64_t>& x) {
    std::vector<std::uint64_t> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      r[i] = x[i] >= 0 ? static_cast<std::uint64_t>(x[i]) % kPrime : kPrime - static_cast<std::uint64_t>(-x[i]) % kPrime;
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const std::uint64_t c = r[lead[e]];
      if (!c) continue;
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = (r[i] + kPrime - mulmod(c, echelon[e][i])) % kPrime;
    }
    std::size_t j = 0;
    while (j < r.size() && !r[j]) ++j;
    if (j == r.size()) return false;
    const std::uint64_t inv = powmod(r[j], kPrime - 2);
    for (auto& v : r) v = mulmod(v, inv);
    echelon.push_back(std::move(r));
    lead.push_back(j);
    probes.push_back(x);
    return true;
  }
  void add(std::size_t i, const std::vector<std::int64_t>& x) {
    members.push_back(i);
    insert(x);
  }
  void absorb(Group& o) {
    for (const auto& p : o.probes) insert(p);
    members.insert(members.end(), o.members.begin(), o.members.end());
    o = Group{};
  }
};

}  // namespace

Decomposition decompose(const Lattice& l, std::uint64_t budget) {
  Decomposition out;
  if (l.rank() == 0) return out;
  const auto basis = reduced_basis(l);
  Dyadic bound = 0;
  for (const auto& b : basis) bound = std::max(bound, b.norm());
  const ShortVectors sv = enumerate_short(l, bound, budget);
  const int s = l.scale();
  std::vector<std::vector<std::int64_t>> vs;
  std::vector<std::int64_t> norms;
  for (const auto& p : sv.pairs) {
    vs.push_back(to_i64(p.v, s));
    norms.push_back(dot(vs.back(), vs.back()));
  }
  // x splits as y + (x - y) with y orthogonal to x - y iff (x,y) = N(y); the
  // smaller part has N(y) <= N(x)/2, and sv is sorted by norm
  std::vector<std::size_t> indec;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    bool split = false;
    for (std::size_t j = 0; j < vs.size() && !split; ++j) {
      if (2 * norms[j] > norms[i]) break;
      const std::int64_t ip = dot(vs[i], vs[j]);
      split = ip == norms[j] || ip == -norms[j];
    }
    if (!split) indec.push_back(i);
  }
  out.indecomposables = indec.size();
  // Grow components greedily: x joins every component it is not orthogonal
  // to, tested against a set of members spanning the component over Q (kept
  // independent mod a prime). The spans are then made exact and any
  // nonorthogonal pair is merged, so a bad mod-p rank can only cost time.
  std::vector<Group> groups;
  for (std::size_t i : indec) {
    std::vector<std::size_t> touched;
    for (std::size_t g = 0; g < groups.size(); ++g)
      if (!groups[g].members.empty() && groups[g].touches(vs[i])) touched.push_back(g);
    if (touched.empty()) {
      groups.emplace_back();
      touched.push_back(groups.size() - 1);
    }
    Group& target = groups[touched[0]];
    for (std::size_t a = 1; a < touched.size(); ++a) target.absorb(groups[touched[a]]);
    target.add(i, vs[i]);
  }
  std::erase_if(groups, [](const Group& g) { return g.members.empty(); });
  // Indecomposables of norm <= bound generate L, so the components are the
  // sublattices of L orthogonal to all other groups' probes. Accept that if
  // every member lands in its own component.
  std::vector<std::vector<std::int64_t>> lb;
  for (std::size_t i = 0; i < l.rank(); ++i) lb.push_back(to_i64(l.basis_vector(i), s));
  bool ok = true;
  for (std::size_t g = 0; g < groups.size() && ok; ++g) {
    std::size_t m = 0;
    for (std::size_t h = 0; h < groups.size(); ++h)
      if (h != g) m += groups[h].probes.size();
    Lattice comp = l;
    if (m > 0) {
      IntMatrix a(l.rank(), m);
      std::size_t c = 0;
      for (std::size_t h = 0; h < groups.size(); ++h) {
        if (h == g) continue;
        for (const auto& p : groups[h].probes) {
          for (std::size_t i = 0; i < l.rank(); ++i) a(i, c) = Int(static_cast<long>(dot(lb[i], p)));
          ++c;
        }
      }
      const IntMatrix k = linalg::integer_kernel(a);
      LatticeBuilder bld(l.d(), s);
      for (std::size_t i = 0; i < k.rows(); ++i) bld.add(l.combination(k.row_vector(i)));
      comp = bld.finish();
    }
    if (comp.rank() != groups[g].probes.size()) ok = false;
    out.components.push_back(std::move(comp));
  }
  std::size_t total_rank = 0;
  for (const auto& c : out.components) total_rank += c.rank();
  ok = ok && total_rank == l.rank();
  for (std::size_t g = 0; g < groups.size() && ok; ++g) {
    std::vector<std::vector<std::int64_t>> other;
    for (std::size_t h = 0; h < groups.size(); ++h)
      if (h != g)
        for (const auto& v : out.components[h].basis()) other.push_back(to_i64(v, s));
    for (std::size_t i : groups[g].members) {
      for (const auto& o : other)
        if (dot(vs[i], o) != 0) ok = false;
      if (!ok) break;
    }
  }
  // slow path: exact spans of the members, merging nonorthogonal pairs
  while (!ok) {
    out.components.clear();
    for (const auto& g : groups) {
      LatticeBuilder bld(l.d(), s);
      for (std::size_t i : g.members) bld.add(sv.pairs[i].v);
      out.components.push_back(bld.finish());
    }
    ok = true;
    for (std::size_t a = 0; a < groups.size() && ok; ++a)
      for (std::size_t b = a + 1; b < groups.size() && ok; ++b)
        for (const auto& x : out.components[a].basis()) {
          bool hit = false;
          for (const auto& y : out.components[b].basis())
            if (!x.inner(y).is_zero()) hit = true;
          if (hit) {
            groups[a].absorb(groups[b]);
            groups.erase(groups.begin() + static_cast<long>(b));
            ok = false;
            break;
          }
        }
  }
  std::sort(out.components.begin(), out.components.end(), [](const Lattice& a, const Lattice& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    if (a.pivots() != b.pivots()) return a.pivots() < b.pivots();
    return linalg::to_string(a.int_basis()) < linalg::to_string(b.int_basis());
  });
  Lattice total(l.d());
  for (const auto& c : out.components) total = sum(total, c);
  require(total.rank() == l.rank(), Errc::internal, "indecomposables do not span");
  out.index = index_in(total, l);
  return out;
}

std::string to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::isometric: return "isometric";
    case IsoStatus::not_isometric: return "not isometric";
    case IsoStatus::evidence_only: return "evidence only";
  }
  return "?";
}

IsometryResult gram_isometric(const IntMatrix& g1, const IntMatrix& g2, std::uint64_t budget) {
  IsometryResult res;
  const std::size_t r = g1.rows();
  if (g2.rows() != r) {
    res.reason = "ranks differ";
    return res;
  }
  if (linalg::det_bareiss(g1) != linalg::det_bareiss(g2)) {
    res.reason = "determinants differ";
    return res;
  }
  if (r == 0) {
    res.status = IsoStatus::isometric;
    return res;
  }
  const LllResult red = lll_gram(g1);
  Int bound = 0;
  for (std::size_t i = 0; i < r; ++i) bound = std::max(bound, red.gram(i, i));
  const Dyadic db(bound, 0);
  if (theta_gram(g1, db, budget) != theta_gram(g2, db, budget)) {
    res.reason = "theta series differ up to norm " + bound.get_str();
    return res;
  }
  if (r > 12) {
    res.status = IsoStatus::evidence_only;
    res.reason = "rank " + std::to_string(r) + " > 12: rank, det and theta agree";
    return res;
  }
  // candidate images in L2, both signs
  std::vector<std::vector<std::int64_t>> cand;
  std::vector<Int> cnorm;
  enumerate_gram(
      g2, Rat(bound),
      [&](const std::vector<std::int64_t>& x, const Int& nrm) -> std::optional<Rat> {
        cand.push_back(x);
        cnorm.push_back(nrm);
        std::vector<std::int64_t> m(x);
        for (auto& e : m) e = -e;
        cand.push_back(m);
        cnorm.push_back(nrm);
        return std::nullopt;
      },
      budget);
  // w = x G2 so that (x, y) = w . y
  std::vector<std::vector<Int>> w(cand.size(), std::vector<Int>(r));
  for (std::size_t c = 0; c < cand.size(); ++c)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < r; ++i)
        if (cand[c][i]) w[c][j] += g2(i, j) * static_cast<long>(cand[c][i]);
  auto inner = [&](std::size_t a, std::size_t b) {
    Int s = 0;
    for (std::size_t j = 0; j < r; ++j)
      if (cand[b][j]) s += w[a][j] * static_cast<long>(cand[b][j]);
    return s;
  };
  std::vector<std::size_t> pick(r);
  std::uint64_t nodes = 0;
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == r) return true;
    for (std::size_t c = 0; c < cand.size(); ++c) {
      if (++nodes > budget) fail(Errc::budget, "isometry search exceeded budget");
      if (cnorm[c] != red.gram(i, i)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = inner(c, pick[j]) == red.gram(i, j);
      if (!ok) continue;
      pick[i] = c;
      if (search(i + 1)) return true;
    }
    return false;
  };
  if (!search(0)) {
    res.reason = "exhaustive search found no isometry";
    return res;
  }
  IntMatrix y(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) y(i, j) = static_cast<long>(cand[pick[i]][j]);
  const linalg::RatMatrix tinv = linalg::inverse(linalg::to_rational(red.transform));
  IntMatrix ti(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      require(tinv(i, j).get_den() == 1, Errc::internal, "LLL transform not unimodular");
      ti(i, j) = tinv(i, j).get_num();
    }
  res.witness = ti * y;
  require(res.witness * g2 * res.witness.transpose() == g1, Errc::internal, "isometry witness fails");
  res.status = IsoStatus::isometric;
  res.reason = "witness found";
  return res;
}

IsometryResult gram_isometric(const Lattice& l1, const Lattice& l2, std::uint64_t budget) {
  GramMatrix a = gram(l1), b = gram(l2);
  const int e = std::min(a.exp, b.exp);
  for (GramMatrix* g : {&a, &b}) {
    const auto sh = static_cast<mp_bitcnt_t>(g->exp - e);
    if (sh)
      for (std::size_t i = 0; i < g->m.rows(); ++i)
        for (std::size_t j = 0; j < g->m.cols(); ++j) g->m(i, j) <<= sh;
    g->exp = e;
  }
  return gram_isometric(a.m, b.m, budget);
}

IntMatrix e8_gram() {
  // Bourbaki labelling: chain 1-3-4-5-6-7-8 with 2 attached to 4
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
  const std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (auto [a, b] : edges) {
    g(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = -1;
    g(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = -1;
  }
  return g;
}

IntMatrix d_gram(int n) {
  require(n >= 2, Errc::precondition, "D_n needs n >= 2");
  const auto m = static_cast<std::size_t>(n);
  IntMatrix g(m, m);
  for (std::size_t i = 0; i < m; ++i) g(i, i) = 2;
  // chain 0-1-...-(n-2) plus node n-1 attached to n-3 (for n = 2: two orthogonal roots)
  for (std::size_t i = 0; i + 2 < m; ++i) {
    g(i, i + 1) = -1;
    g(i + 1, i) = -1;
  }
  if (n >= 3) {
    g(m - 1, m - 3) = -1;
    g(m - 3, m - 1) = -1;
  }
  return g;
}

}  // namespace bwc::lat
