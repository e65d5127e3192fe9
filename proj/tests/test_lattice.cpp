#include <random>
#include <set>

#include "bwc/error.hpp"
#include "bwc/gf2/affine.hpp"
#include "bwc/lattice/analysis.hpp"
#include "doctest.h"

using namespace bwc;
using namespace bwc::lat;

namespace {

// BW_d from its minimal vectors 2^{-m} v_A, A an affine 2m-space
Lattice bw_from_flats(int d) {
  std::vector<DyadicVector> gens;
  for (int m = 0; 2 * m <= d; ++m)
    gf2::for_each_affine_subspace(d, 2 * m, [&](const gf2::AffineSubspace& a) {
      gens.push_back(DyadicVector::from_word(a.word(), m));
    });
  return make_lattice(d, gens);
}

// L placed on coordinates [offset, offset + 2^{l.d()}) of a larger ambient
Lattice embed(const Lattice& l, int d, std::size_t offset) {
  std::vector<DyadicVector> gens;
  for (const auto& b : l.basis()) {
    DyadicVector x(d);
    for (std::size_t i = 0; i < b.size(); ++i) x[offset + i] = b[i];
    gens.push_back(x);
  }
  return make_lattice(d, gens);
}

Lattice random_lattice(int d, std::size_t rank, std::size_t ncoords, int scale, long amp, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-amp, amp);
  for (;;) {
    IntMatrix rows(rank, std::size_t{1} << d);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < ncoords; ++j) rows(i, j) = dist(rng);
    if (linalg::rank(rows) == rank) return lattice_from_rows(d, scale, rows);
  }
}

// U * diag(2^{a_i}) on the first `rank` coordinates, U a random unimodular matrix
Lattice random_dyadic_lattice(int d, std::size_t rank, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> ex(0, 2), pick(0, static_cast<int>(rank) - 1), mult(-2, 2);
  IntMatrix rows(rank, std::size_t{1} << d);
  for (std::size_t i = 0; i < rank; ++i) rows(i, i) = Int(1) << ex(rng);
  for (int step = 0; step < 12; ++step) {
    const auto i = static_cast<std::size_t>(pick(rng)), j = static_cast<std::size_t>(pick(rng));
    if (i == j) continue;
    const long k = mult(rng);
    for (std::size_t c = 0; c < rows.cols(); ++c) rows(i, c) += k * rows(j, c);
  }
  return lattice_from_rows(d, 1, rows);
}

}  // namespace

TEST_CASE("vectors: inner product scale and levels") {
  const auto v0 = DyadicVector::unit(4, 0);
  CHECK(v0.norm() == Dyadic(4));
  CHECK(DyadicVector::unit(5, 3).norm() == Dyadic(4));
  CHECK(DyadicVector::unit(3, 1).inner(DyadicVector::unit(3, 0)) == Dyadic(0));

  auto lt = level_and_top(DyadicVector::unit(3, 5));
  CHECK(lt.level == 0);
  CHECK(lt.top == DyadicVector::unit(3, 5));

  const auto a = gf2::AffineSubspace::coordinate(4, {0, 1}, 1).word();
  const auto x = DyadicVector::from_word(a, 1);
  lt = level_and_top(x);
  CHECK(lt.level == 1);
  CHECK(lt.top == x);

  CHECK_THROWS_AS(level_and_top(DyadicVector(3)), Error);
}

TEST_CASE("vectors: top of a vector need not lie in the lattice") {
  // d = 1: two coordinates, unscaled inner product
  const DyadicVector x(1, {Dyadic::parse("1/2^1"), Dyadic::parse("1/2^2")});
  const auto lt = level_and_top(x);
  CHECK(lt.level == 2);
  CHECK(lt.top == DyadicVector(1, {Dyadic(0), Dyadic::parse("1/2^2")}));
  const auto l = make_lattice(1, {DyadicVector::unit(1, 0), DyadicVector::unit(1, 1), x});
  CHECK(l.contains(x));
  CHECK_FALSE(l.contains(lt.top));
}

TEST_CASE("vectors: negative coordinates use negated digits") {
  const DyadicVector x(2, {Dyadic::parse("-3/2^2"), Dyadic(1), Dyadic::parse("1/2^1"), Dyadic(0)});
  const auto lt = level_and_top(x);
  CHECK(lt.level == 2);
  CHECK(lt.top == DyadicVector(2, {Dyadic::parse("-1/2^2"), Dyadic(0), Dyadic(0), Dyadic(0)}));
}

TEST_CASE("make_lattice: canonical form") {
  for (int d = 1; d <= 5; ++d) {
    const auto m = standard_lattice(d);
    const auto g = gram(m);
    CHECK(g.m == IntMatrix::identity(std::size_t{1} << d));
    CHECK(g.exp == d / 2);
  }
  std::vector<DyadicVector> gens{DyadicVector::unit(3, 0), DyadicVector::unit(3, 2)};
  const auto a = make_lattice(3, gens);
  gens.push_back(DyadicVector::unit(3, 0));
  gens.push_back(DyadicVector::unit(3, 0) + DyadicVector::unit(3, 2));
  CHECK(make_lattice(3, gens) == a);

  const auto bw = bw_from_flats(4);
  CHECK(make_lattice(4, bw.basis()) == bw);
  CHECK(make_lattice(4, reduced_basis(bw)) == bw);

  CHECK_THROWS_AS(make_lattice(3, {DyadicVector::unit(3, 0), DyadicVector::unit(4, 0)}), Error);
}

TEST_CASE("gram and det of Barnes-Wall lattices") {
  const auto bw3 = bw_from_flats(3);
  CHECK(bw3.rank() == 8);
  CHECK(det(bw3) == Dyadic(1));
  CHECK(is_even(bw3));
  const auto bw4 = bw_from_flats(4);
  CHECK(bw4.rank() == 16);
  CHECK(det(bw4) == Dyadic::pow2(8));
  CHECK(is_even(bw4));
  const auto bw2 = bw_from_flats(2);
  CHECK(det(bw2) == Dyadic(4));
  CHECK(det(bw3.scaled_pow2(1)) == Dyadic::pow2(16));
  CHECK(det(bw4.scaled_pow2(-1)) == Dyadic::pow2(8 - 32));
}

TEST_CASE("dual, sum, intersect, index") {
  const auto bw5 = bw_from_flats(5);
  CHECK(det(bw5) == Dyadic(1));
  CHECK(dual(bw5) == bw5);
  const auto bw3 = bw_from_flats(3);
  CHECK(dual(bw3) == bw3);
  CHECK(intersect(bw3, bw3) == bw3);
  CHECK(index_in(bw3, bw3.scaled_pow2(-1)) == Int(256));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const auto l = random_dyadic_lattice(3, 5, rng);
    const auto dl = dual(l);
    CHECK(det(l) * det(dl) == Dyadic(1));
    CHECK(dual(dl) == l);
    // random finite-index sublattice
    const auto n = random_lattice(3, 5, 5, 0, 2, rng);
    std::vector<DyadicVector> gens;
    IntMatrix c(5, 5);
    std::uniform_int_distribution<long> dist(-3, 3);
    for (std::size_t i = 0; i < 5; ++i) {
      DyadicVector v(3);
      for (std::size_t j = 0; j < 5; ++j) {
        c(i, j) = dist(rng);
        DyadicVector b = l.basis_vector(j);
        b *= c(i, j);
        v += b;
      }
      gens.push_back(v);
    }
    if (linalg::det_bareiss(c) == 0) continue;
    const auto sub = make_lattice(3, gens);
    const Int idx = index_in(sub, l);
    CHECK(idx == abs(linalg::det_bareiss(c)));
    CHECK(Dyadic(idx * idx, 0) * det(l) == det(sub));
    CHECK(l.contains_lattice(sub));
    CHECK(intersect(sub, l) == sub);
    CHECK(sum(sub, l) == l);
    // unrelated lattice
    const auto s = sum(l, n), i = intersect(l, n);
    CHECK(s.contains_lattice(l));
    CHECK(s.contains_lattice(n));
    CHECK(l.contains_lattice(i));
    CHECK(n.contains_lattice(i));
  }
  CHECK_THROWS_AS(index_in(Lattice(3), bw3), Error);
  CHECK_THROWS_AS(dual(make_lattice(3, {DyadicVector::unit(3, 0) + DyadicVector::unit(3, 1) + DyadicVector::unit(3, 2)})), Error);
}

TEST_CASE("intersect inside a dyadic span") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> dist(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto b = random_lattice(3, 5, 5, 0, 3, rng);
    std::vector<DyadicVector> gens;
    for (int i = 0; i < 5; ++i) {
      DyadicVector v(3);
      for (std::size_t j = 0; j < 5; ++j) {
        DyadicVector x = b.basis_vector(j);
        x *= Int(dist(rng));
        v += x;
      }
      v.mul_pow2(-(trial % 4));
      gens.push_back(v);
    }
    const auto a = make_lattice(3, gens);
    if (a.rank() < 5) continue;
    const auto i = intersect(a, b), s = sum(a, b);
    CHECK(a.contains_lattice(i));
    CHECK(b.contains_lattice(i));
    CHECK(det(i) * det(s) == det(a) * det(b));
    CHECK(intersect(b, a) == i);
  }
}

TEST_CASE("enumerate_short matches a box search on small ranks") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t rank = 2 + static_cast<std::size_t>(trial % 5);
    const auto l = random_lattice(3, rank, 6, 1, 2, rng);
    // norm of ints c at scale 1 in d = 3 is sum(c^2)/2; bound 5 allows |c| <= 3
    const Dyadic bound(5);
    std::set<std::vector<long>> box;
    std::vector<long> c(6, -3);
    for (;;) {
      long ss = 0;
      for (long e : c) ss += e * e;
      if (ss > 0 && ss <= 10) {
        std::vector<Int> ints(8);
        for (std::size_t j = 0; j < 6; ++j) ints[j] = c[j];
        if (l.contains(DyadicVector::from_ints(3, ints, 1))) box.insert(c);
      }
      std::size_t k = 0;
      while (k < 6 && c[k] == 3) c[k++] = -3;
      if (k == 6) break;
      ++c[k];
    }
    const auto sv = enumerate_short(l, bound);
    CHECK(sv.total == box.size());
    std::set<std::vector<long>> got;
    for (const auto& p : sv.pairs) {
      CHECK(p.norm <= bound);
      CHECK(p.norm == p.v.norm());
      const auto ints = p.v.to_ints(1);
      std::vector<long> a(6), b(6);
      for (std::size_t j = 0; j < 6; ++j) {
        a[j] = ints[j].get_si();
        b[j] = -a[j];
      }
      got.insert(a);
      got.insert(b);
    }
    CHECK(got == box);
  }
}

TEST_CASE("enumerate_short and theta on Barnes-Wall lattices") {
  const auto bw3 = bw_from_flats(3);
  const auto sv = enumerate_short(bw3, Dyadic(2));
  CHECK(sv.pairs.size() == 120);
  CHECK(sv.total == 240);
  CHECK(enumerate_short(bw3, Dyadic(3, 1)).total == 0);

  const auto th = theta(bw3, Dyadic(4));
  CHECK(th.counts == std::map<Dyadic, std::uint64_t>{{Dyadic(0), 1}, {Dyadic(2), 240}, {Dyadic(4), 2160}});

  const auto bw4 = bw_from_flats(4);
  CHECK(enumerate_short(bw4, Dyadic(4)).total == 4320);
  CHECK(enumerate_short(bw4, Dyadic(3)).total == 0);

  CHECK_THROWS_AS(enumerate_short(bw4, Dyadic(4), 100), Error);
}

TEST_CASE("min_norm of Barnes-Wall lattices") {
  for (int d = 1; d <= 5; ++d) {
    const auto mn = min_norm(bw_from_flats(d));
    CHECK(mn.norm == Dyadic::pow2(d / 2));
    CHECK(mn.witness.norm() == mn.norm);
  }
}

TEST_CASE("theta of an orthogonal sum is the product") {
  const auto d4 = bw_from_flats(2);
  const auto e8 = bw_from_flats(3);
  const auto a = embed(d4, 3, 0);
  const auto b = embed(make_lattice(2, {DyadicVector::unit(2, 0), DyadicVector::unit(2, 1)}), 3, 4);
  const auto s = sum(a, b);
  const Dyadic bound(6);
  const auto ta = theta(a, bound), tb = theta(b, bound), ts = theta(s, bound);
  std::map<Dyadic, std::uint64_t> prod;
  for (const auto& [na, ca] : ta.counts)
    for (const auto& [nb, cb] : tb.counts)
      if (na + nb <= bound) prod[na + nb] += ca * cb;
  CHECK(ts.counts == prod);
  for (const auto& [n, cnt] : ts.counts)
    if (!n.is_zero()) CHECK(cnt % 2 == 0);
  CHECK(theta(e8, Dyadic(0)).counts.at(Dyadic(0)) == 1);
}

TEST_CASE("discriminant groups") {
  CHECK(discriminant_group(bw_from_flats(3)).empty());
  CHECK(discriminant_group(bw_from_flats(5)).empty());
  const auto disc = discriminant_group(bw_from_flats(4));
  CHECK(disc == std::vector<Int>(8, Int(2)));
  const auto d2 = discriminant_group(bw_from_flats(2));
  Int prod = 1;
  for (const auto& f : d2) prod *= f;
  CHECK(Dyadic(prod, 0) == det(bw_from_flats(2)));
}

TEST_CASE("decompose") {
  const auto e8 = bw_from_flats(3);
  auto dec = decompose(e8);
  CHECK(dec.components.size() == 1);
  CHECK(dec.index == 1);

  const auto d4 = bw_from_flats(2);
  const auto a = embed(d4, 3, 0), b = embed(d4, 3, 4);
  dec = decompose(sum(a, b));
  REQUIRE(dec.components.size() == 2);
  CHECK(((dec.components[0] == a && dec.components[1] == b) || (dec.components[0] == b && dec.components[1] == a)));
  CHECK(dec.index == 1);

  dec = decompose(standard_lattice(3));
  CHECK(dec.components.size() == 8);
  for (const auto& c : dec.components) CHECK(c.rank() == 1);
}

TEST_CASE("gram_isometric") {
  const auto e8 = bw_from_flats(3);
  auto r = gram_isometric(e8, e8);
  CHECK(r.status == IsoStatus::isometric);
  const auto g = gram(e8).integer();
  CHECK(r.witness * g * r.witness.transpose() == g);

  r = gram_isometric(gram(e8).integer(), e8_gram());
  CHECK(r.status == IsoStatus::isometric);
  CHECK(r.witness * e8_gram() * r.witness.transpose() == g);
  CHECK(abs(linalg::det_bareiss(r.witness)) == 1);

  r = gram_isometric(e8_gram(), IntMatrix::identity(8));
  CHECK(r.status == IsoStatus::not_isometric);
  CHECK(r.reason.find("theta") != std::string::npos);

  r = gram_isometric(e8_gram(), d_gram(8));
  CHECK(r.status == IsoStatus::not_isometric);

  r = gram_isometric(gram(bw_from_flats(2)).integer(), d_gram(4));
  CHECK(r.status == IsoStatus::isometric);

  // equal det, different theta
  const IntMatrix g1{{1, 0}, {0, 6}};
  const IntMatrix g2{{2, 0}, {0, 3}};
  r = gram_isometric(g1, g2);
  CHECK(r.status == IsoStatus::not_isometric);
  CHECK(r.reason.find("theta") != std::string::npos);

  r = gram_isometric(gram(bw_from_flats(4)).integer(), gram(bw_from_flats(4)).integer());
  CHECK(r.status == IsoStatus::evidence_only);
}

TEST_CASE("level sublattices") {
  const auto bw3 = bw_from_flats(3);
  const auto m = standard_lattice(3);
  const auto l0 = level_sublattice(bw3, m, 0);
  CHECK(l0 == intersect(m, bw3));
  Int idx = index_in(l0, bw3);
  CHECK(mpz_popcount(idx.get_mpz_t()) == 1);
  Lattice prev = l0;
  for (int q = 1; q <= 4; ++q) {
    const auto lq = level_sublattice(bw3, m, q);
    CHECK(lq.contains_lattice(prev));
    CHECK(prev.contains_lattice(lq.scaled_pow2(1)));
    prev = lq;
  }
  CHECK(prev == bw3);
  CHECK(level_sublattice(bw_from_flats(4), standard_lattice(4), 10) == bw_from_flats(4));
  const auto off = make_lattice(2, {DyadicVector::unit(2, 1)});
  CHECK_THROWS_AS(level_sublattice(off, make_lattice(2, {DyadicVector::unit(2, 0)}), 0), Error);
}
