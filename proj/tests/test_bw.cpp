#include <set>

#include "bwc/bw/barneswall.hpp"
#include "bwc/error.hpp"
#include "bwc/lattice/analysis.hpp"
#include "doctest.h"

using namespace bwc;
using namespace bwc::bw;
using brw::standard_pair;
using lat::Dyadic;
using lat::Int;

namespace {

Lattice bw_from_flats(int d) {
  std::vector<DyadicVector> gens;
  for (int m = 0; 2 * m <= d; ++m)
    gf2::for_each_affine_subspace(d, 2 * m, [&](const gf2::AffineSubspace& a) {
      gens.push_back(DyadicVector::from_word(a.word(), m));
    });
  return lat::make_lattice(d, gens);
}

std::vector<DyadicVector> both_signs(const lat::ShortVectors& sv) {
  std::vector<DyadicVector> out;
  for (const auto& p : sv.pairs) {
    out.push_back(p.v);
    out.push_back(-p.v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIsometry functional_sign(int d, gf2::Point a, bool constant) {
  gf2::BitWord w(d);
  for (gf2::Point x = 0; x < (gf2::Point{1} << d); ++x)
    if (((std::popcount(a & x) & 1) != 0) != constant) w.set(x);
  return MonomialIsometry::sign_change(w);
}

}  // namespace

TEST_CASE("build_bw: determinant, parity, agreement with the flat span") {
  for (int d = 1; d <= 7; ++d) {
    const auto& l = build_bw(d);
    CHECK(l.rank() == (std::size_t{1} << d));
    if (d % 2) {
      CHECK(lat::det(l) == Dyadic(1));
    } else {
      CHECK(lat::det(l) == Dyadic::pow2(1 << (d - 1)));
    }
    if (d >= 2) CHECK(lat::is_even(l));
    if (d <= 5) CHECK(l == bw_from_flats(d));
  }
  CHECK_FALSE(lat::is_even(build_bw(1)));
  CHECK_THROWS_AS(build_bw(10), Error);
}

TEST_CASE("minimal vectors of BW_d") {
  const std::size_t kissing[] = {0, 4, 24, 240, 4320};
  for (int d = 1; d <= 4; ++d) {
    const auto& l = build_bw(d);
    const Dyadic mu = Dyadic::pow2(d / 2);
    CHECK(lat::min_norm(l).norm == mu);
    const auto sv = lat::enumerate_short(l, mu);
    CHECK(sv.total == kissing[d]);
    const auto std_set = standard_minimal_vectors(d);
    CHECK(std_set == both_signs(sv));
    for (const auto& v : std_set) CHECK(v.norm() == mu);
  }
  CHECK(lat::min_norm(build_bw(5)).norm == Dyadic(4));
  CHECK_THROWS_AS(standard_minimal_vectors(6), Error);
}

TEST_CASE("twists") {
  for (int d = 2; d <= 5; ++d) {
    const auto& l = build_bw(d);
    const auto f = brw::standard_fourvolution(d).f;
    CHECK(twist(l, 0, f) == l);
    CHECK(twist(l, 2, f) == l.scaled_pow2(1));
    const auto l1 = twist(l, 1, f);
    // another lower fourvolution: H = {x_1 + x_d = 1}, same c
    gf2::BitWord h(d);
    for (gf2::Point x = 0; x < (gf2::Point{1} << d); ++x)
      if (((x & 1U) != 0) != ((x >> (d - 1) & 1U) != 0)) h.set(x);
    CHECK(l1 == twist(l, 1, brw::make_fourvolution(h, gf2::Point{1} << (d - 1)).f));
    CHECK(lat::index_in(l1, l) == Int(1) << (1 << (d - 1)));
    if (d <= 4) CHECK(lat::min_norm(l1).norm == Dyadic::pow2(d / 2 + 1));
  }
}

TEST_CASE("minimal vectors of BW_d[1]") {
  for (int d = 2; d <= 4; ++d) {
    const auto l1 = twist(build_bw(d), 1, brw::standard_fourvolution(d).f);
    const Dyadic mu = Dyadic::pow2(d / 2 + 1);
    const auto k = bw_twist_minvecs(d);
    CHECK(k == both_signs(lat::enumerate_short(l1, mu)));
    for (const auto& v : k) CHECK(v.norm() == mu);
  }
  // m = 0 stratum: v_A for A a pair of points
  const auto k3 = bw_twist_minvecs(3);
  CHECK(std::binary_search(k3.begin(), k3.end(), DyadicVector::unit(3, 0) + DyadicVector::unit(3, 5)));
}

TEST_CASE("eigenlattices and projections") {
  const auto& l5 = build_bw(5);
  const auto id = MonomialIsometry::identity(5);
  CHECK(eigenlattice(l5, id, 1) == l5);
  CHECK(eigenlattice(l5, id, -1).rank() == 0);

  for (int d = 2; d <= 6; ++d)
    for (int k = 1; 2 * k <= d; ++k) {
      const auto& l = build_bw(d);
      const auto t = brw::make_involution(gf2::cubi_codeword(d, k)).t;
      const auto e = eigen_data(l, t);
      CHECK(e.plus.rank() == (std::size_t{1} << (d - 1)) + (std::size_t{1} << (d - k - 1)));
      CHECK(e.minus.rank() == (std::size_t{1} << (d - 1)) - (std::size_t{1} << (d - k - 1)));
      for (const auto& v : e.plus.basis()) CHECK(t.apply(v) == v);
      for (const auto& v : e.minus.basis()) CHECK(t.apply(v) == -v);
      CHECK(lat::gram_of(d, {e.plus.basis_vector(0), e.minus.basis_vector(0)}).m(0, 1) == 0);
    }

  for (int k = 1; k <= 2; ++k) {
    const auto t = brw::make_involution(gf2::cubi_codeword(5, k)).t;
    const auto e = eigen_data(l5, t);
    CHECK(e.minus == commutator_sublattice(l5, t));
    const auto pm = projected_lattice(l5, t, -1), pp = projected_lattice(l5, t, 1);
    CHECK(pm.scaled_pow2(1).contains_lattice(e.minus));
    const auto half_tel = e.tel.scaled_pow2(-1);
    for (const auto& x : l5.basis()) {
      const auto a = project(x, t, 1), b = project(x, t, -1);
      CHECK(a + b == x);
      CHECK(project(a, t, 1) == a);
      CHECK(half_tel.contains(a));
      CHECK(half_tel.contains(b));
      CHECK(pp.contains(a));
    }
  }
  // non-diagonal involution takes the kernel path
  const auto tau = MonomialIsometry::translation(5, 3);
  const auto e = eigen_data(l5, tau);
  CHECK(e.plus.rank() == 16);
  CHECK(e.minus.rank() == 16);
  for (const auto& v : e.plus.basis()) CHECK(tau.apply(v) == v);
  CHECK(projected_lattice(l5, tau, 1).contains_lattice(e.plus));
}

TEST_CASE("Jordan numbers and total eigenlattice index") {
  for (int d = 2; d <= 6; ++d) {
    const auto& l = build_bw(d);
    CHECK(brw::jordan_number(l, MonomialIsometry::minus_one(d)) == 0);
    CHECK(brw::jordan_number(l, MonomialIsometry::identity(d)) == 0);
    const auto lower = {MonomialIsometry::translation(d, 1), functional_sign(d, 1, false), MonomialIsometry::translation(d, 3)};
    for (const auto& g : lower) CHECK(brw::jordan_number(l, g) == 1 << (d - 2));
    for (int k = 1; 2 * k < d; ++k) {
      const auto t = standard_pair(d, k).t.t;
      const int j = brw::jordan_number(l, t);
      CHECK(j == (1 << (d - 1)) - (1 << (d - k - 1)));
      CHECK(lat::index_in(eigen_data(l, t).tel, l) == Int(1) << j);
    }
  }
  CHECK_THROWS_AS(brw::jordan_number(build_bw(3), MonomialIsometry::translation(3, 1) * functional_sign(3, 1, false)), Error);
}

TEST_CASE("nonsplit involution witness") {
  std::optional<brw::NonsplitWitness> w;
  int d = 2;
  for (; d <= 4 && !w; ++d) w = brw::find_nonsplit_involution(d);
  --d;
  REQUIRE(w.has_value());
  CHECK(w->t.is_involution());
  CHECK(w->t.in_brw());
  CHECK_FALSE(brw::is_split(w->t));
  CHECK(brw::jordan_number(build_bw(d), w->t) == 1 << (d - 1));
}

TEST_CASE("discriminant groups of eigenlattices, d = 5") {
  const auto& l = build_bw(5);
  for (int k = 1; k <= 2; ++k) {
    const auto t = standard_pair(5, k).t.t;
    const auto e = eigen_data(l, t);
    const std::size_t rank = 16 - (std::size_t{1} << (4 - k));
    CHECK(lat::discriminant_group(e.plus) == std::vector<Int>(rank, Int(2)));
    CHECK(lat::discriminant_group(e.minus) == std::vector<Int>(rank, Int(2)));
  }
}

TEST_CASE("commutators and 2/4 generation") {
  const auto& l4 = build_bw(4);
  CHECK(commutator_sublattice(l4, MonomialIsometry::identity(4)).rank() == 0);
  CHECK(commutator_sublattice(l4, MonomialIsometry::minus_one(4)) == l4.scaled_pow2(1));

  for (int d = 2; d <= 5; ++d) {
    const auto& l = build_bw(d);
    const auto f = brw::standard_fourvolution(d);
    const auto lf = commutator_sublattice(l, f.f);
    CHECK(lower_commutator(l) == lf);
    if (d <= 4) {
      // oracle: every element eps_A tau_c of the lower group
      lat::LatticeBuilder b(d, l.scale());
      for (gf2::Point a = 0; a < (gf2::Point{1} << d); ++a)
        for (int cst = 0; cst < 2; ++cst)
          for (gf2::Point c = 0; c < (gf2::Point{1} << d); ++c) {
            const auto g = functional_sign(d, a, cst) * MonomialIsometry::translation(d, c);
            for (const auto& v : l.basis()) b.add(g.apply(v) - v);
          }
      CHECK(b.finish() == lf);
    }
    const auto p = brw::lower_dihedral_pair(f);
    const auto m1 = MonomialIsometry::minus_one(d);
    for (const auto& u : {p.u, p.u * m1})
      for (const auto& v : {p.v, p.v * m1}) {
        CHECK(check_two_four(l, {u, v}));
        CHECK(check_two_four(l.scaled_pow2(1), {u, v}));
      }
  }
  const auto p = brw::lower_dihedral_pair(brw::standard_fourvolution(4));
  CHECK_THROWS_AS(check_two_four(l4, {p.u, p.u}), Error);
}

TEST_CASE("top closure fails in BW_8") {
  const auto w = find_top_closure_failure(8, 8);
  REQUIRE(w.has_value());
  CHECK(w->x_in_lattice);
  CHECK_FALSE(w->top_in_lattice);
  CHECK(lat::level_and_top(w->x).level == 2);
}
