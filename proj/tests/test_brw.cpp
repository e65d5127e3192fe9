#include <random>

#include "bwc/brw/involution.hpp"
#include "bwc/error.hpp"
#include "doctest.h"

using namespace bwc;
using namespace bwc::brw;
using lat::Dyadic;

namespace {

MonomialIsometry random_monomial(int d, std::mt19937_64& rng) {
  const Point n = Point{1} << d;
  std::uniform_int_distribution<Point> pt(0, n - 1);
  for (;;) {
    std::vector<Point> rows(static_cast<std::size_t>(d));
    for (auto& r : rows) r = pt(rng);
    if (gf2::LinearSpan(d, rows).dimension() != d) continue;
    BitWord s(d);
    for (Point i = 0; i < n; ++i)
      if (rng() & 1U) s.set(i);
    return {s, rows, pt(rng)};
  }
}

DyadicVector random_vector(int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> c(-9, 9);
  std::vector<lat::Int> ints(std::size_t{1} << d);
  for (auto& x : ints) x = c(rng);
  return DyadicVector::from_ints(d, ints, 2);
}

lat::IntMatrix row_times(const std::vector<lat::Int>& x, const lat::IntMatrix& m) {
  lat::IntMatrix r(1, x.size());
  for (std::size_t j = 0; j < x.size(); ++j) r(0, j) = x[j];
  return r * m;
}

}  // namespace

TEST_CASE("apply: identity, -1 and the fourvolution") {
  std::mt19937_64 rng(3);
  const int d = 4;
  const auto x = random_vector(d, rng);
  CHECK(MonomialIsometry::identity(d).apply(x) == x);
  const auto m1 = MonomialIsometry::minus_one(d);
  CHECK(m1.apply(x) == -x);
  CHECK(m1.apply(m1.apply(x)) == x);

  const auto sp = standard_pair(5, 2);
  for (Point i = 0; i < 32; ++i) {
    const auto img = sp.f.f.apply(DyadicVector::unit(5, i));
    auto expect = DyadicVector::unit(5, i ^ sp.f.c);
    if (sp.f.h.test(i)) expect = -expect;
    CHECK(img == expect);
  }
}

TEST_CASE("composition is a right action and matches signed permutation matrices") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 3;
    const auto g = random_monomial(d, rng), h = random_monomial(d, rng);
    const auto x = random_vector(d, rng), y = random_vector(d, rng);
    CHECK((g * h).apply(x) == h.apply(g.apply(x)));
    CHECK((g * h).matrix() == g.matrix() * h.matrix());
    CHECK(g * g.inverse() == MonomialIsometry::identity(d));
    CHECK(g.inverse() * g == MonomialIsometry::identity(d));
    CHECK(g.apply(x).inner(g.apply(y)) == x.inner(y));
    CHECK(g.apply(x).norm() == x.norm());
    const auto xi = x.to_ints(2);
    CHECK(row_times(xi, g.matrix()).row_vector(0) == g.apply(x).to_ints(2));
    long tr = 0;
    const auto m = g.matrix();
    for (std::size_t i = 0; i < m.rows(); ++i) tr += m(i, i).get_si();
    CHECK(g.trace() == tr);
    CHECK(g.pow(4) == g * g * g * g);
  }
}

TEST_CASE("traces") {
  for (int d = 2; d <= 7; ++d)
    for (int k = 1; 2 * k <= d; ++k) {
      const auto t = make_involution(gf2::cubi_codeword(d, k));
      CHECK(t.trace == (1L << (d - k)));
    }
  CHECK(MonomialIsometry::translation(4, 5).trace() == 0);
  CHECK(MonomialIsometry::minus_one(5).trace() == -32);
  CHECK(MonomialIsometry::identity(3).trace() == 8);
}

TEST_CASE("diagonal involutions: trace is 0 or +-2^{d - defect}") {
  std::mt19937_64 rng(17);
  for (int d = 2; d <= 5; ++d) {
    const auto rm2 = gf2::build_rm(2, d);
    std::vector<BitWord> words;
    if (d <= 4) {
      words = rm2.words();
    } else {
      for (int i = 0; i < 400; ++i) words.push_back(rm2.random_word(rng));
    }
    for (const auto& a : words) {
      const long tr = MonomialIsometry::sign_change(a).trace();
      if (tr == 0) continue;
      const long mag = tr < 0 ? -tr : tr;
      CHECK(std::has_single_bit(static_cast<unsigned long>(mag)));
      CHECK(mag == (1L << (d - gf2::defect(a))));
    }
  }
}

TEST_CASE("membership flags") {
  const int d = 4;
  CHECK(MonomialIsometry::minus_one(d).is_lower());
  CHECK(MonomialIsometry::translation(d, 3).is_lower());
  const auto h = gf2::AffineSubspace::coordinate(d, {1}, 1).word();
  CHECK(MonomialIsometry::sign_change(h).is_lower());
  const auto z = gf2::cubi_codeword(d, 1).word;
  CHECK(MonomialIsometry::sign_change(z).in_brw());
  CHECK_FALSE(MonomialIsometry::sign_change(z).is_lower());
  CHECK_FALSE(MonomialIsometry::sign_change(BitWord::point(d, 0)).in_brw());
  CHECK_FALSE(MonomialIsometry::linear_map(d, {2, 1, 4, 8}).is_lower());
  CHECK(MonomialIsometry::linear_map(d, {2, 1, 4, 8}).in_brw());
  CHECK_THROWS_AS(MonomialIsometry::linear_map(d, {1, 1, 4, 8}), Error);
}

TEST_CASE("standard pairs") {
  auto sp = standard_pair(5, 2);
  CHECK(sp.t.trace == 8);
  CHECK(sp.t.core.dimension() == 1);
  CHECK(sp.t.core.contains(sp.f.c));

  sp = standard_pair(7, 2);
  CHECK(sp.t.trace == 32);
  for (Point i = 0; i < 128; ++i) {
    const auto v = DyadicVector::unit(7, i);
    CHECK(sp.f.f.apply(sp.f.f.apply(v)) == -v);
    CHECK(sp.t.t.apply(sp.f.f.apply(v)) == sp.f.f.apply(sp.t.t.apply(v)));
  }
  CHECK(sp.t.t.is_involution());

  CHECK_THROWS_AS(standard_pair(4, 2), Error);
  CHECK_THROWS_AS(standard_pair(5, 3), Error);
  CHECK_THROWS_AS(standard_pair(5, 0), Error);

  for (auto [d, k] : {std::pair{5, 1}, {5, 2}, {7, 2}, {7, 3}}) {
    const auto p = standard_pair(d, k);
    const auto f2 = alternate_fourvolution(p.t);
    CHECK(f2.f != p.f.f);
    CHECK(f2.f * p.t.t == p.t.t * f2.f);
  }
}

TEST_CASE("fourvolution preconditions") {
  const auto h = gf2::AffineSubspace::coordinate(4, {3}, 0).word();
  CHECK_NOTHROW(make_fourvolution(h, 8));
  CHECK_THROWS_AS(make_fourvolution(h, 1), Error);  // c inside the direction space of H
  CHECK_THROWS_AS(make_fourvolution(h, 0), Error);
  CHECK_THROWS_AS(make_fourvolution(gf2::cubi_codeword(4, 1).word, 8), Error);
}

TEST_CASE("dihedral pairs") {
  const auto sp = standard_pair(4, 1);
  const auto p = lower_dihedral_pair(sp.f);
  CHECK(p.u * p.v == sp.f.f);
  CHECK_THROWS_AS(check_dihedral({p.u, p.u}), Error);
  CHECK_THROWS_AS(check_dihedral({p.u, sp.t.t}), Error);
  const auto m1 = MonomialIsometry::minus_one(4);
  CHECK_NOTHROW(check_dihedral({p.u * m1, p.v}));
  CHECK_NOTHROW(check_dihedral({p.u, p.v * m1}));
}

TEST_CASE("split involutions") {
  for (int d = 2; d <= 4; ++d) {
    CHECK(is_split(MonomialIsometry::minus_one(d)));
    CHECK(is_split(MonomialIsometry::translation(d, 1)));
    for (int k = 1; 2 * k <= d; ++k) CHECK(is_split(make_involution(gf2::cubi_codeword(d, k)).t));
  }
}
