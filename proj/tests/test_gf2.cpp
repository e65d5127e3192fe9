#include <random>

#include "bwc/gf2/codes.hpp"
#include "doctest.h"

using namespace bwc;
using namespace bwc::gf2;

namespace {

int binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  long v = 1;
  for (int i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
  return static_cast<int>(v);
}

// RM(k,d) as the span of all affine subspaces of codimension <= k.
Code rm_from_flats(int k, int d) {
  Code c(d);
  for (int dim = std::max(0, d - k); dim <= d; ++dim)
    for_each_affine_subspace(d, dim, [&](const AffineSubspace& a) { c.insert(a.word()); });
  return c;
}

BitWord random_subset(int d, std::mt19937_64& rng) {
  BitWord w(d);
  for (Point x = 0; x < (Point{1} << d); ++x)
    if (rng() & 1U) w.set(x);
  return w;
}

}  // namespace

TEST_CASE("bitword basics and hex round trip") {
  BitWord w = BitWord::from_points(4, {0, 3, 15});
  CHECK(w.weight() == 3);
  CHECK(w.hex() == "8009");
  CHECK(BitWord::from_hex(4, "8009") == w);
  CHECK(BitWord::from_hex(1, "2") == BitWord::point(1, 1));
  CHECK_THROWS_AS(BitWord::from_hex(4, "809"), Error);
  CHECK(BitWord::full(3).weight() == 8);
  CHECK(w.translate(0) == w);
  CHECK_THROWS_AS(BitWord(10), Error);
  try {
    BitWord(0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::size);
  }
}

TEST_CASE("affine subspace enumeration counts") {
  for (int d = 1; d <= 5; ++d)
    for (int m = 0; m <= d; ++m) {
      std::uint64_t lin = 0, aff = 0;
      for_each_linear_subspace(d, m, [&](const std::vector<Point>&) { ++lin; });
      for_each_affine_subspace(d, m, [&](const AffineSubspace& a) {
        ++aff;
        CHECK(a.word().weight() == (1 << m));
      });
      CHECK(lin == gaussian_binomial2(d, m));
      CHECK(aff == (gaussian_binomial2(d, m) << (d - m)));
    }
}

TEST_CASE("RM dimensions and flat spanning set") {
  for (int d = 1; d <= 6; ++d)
    for (int k = 0; k <= d; ++k) {
      const Code c = build_rm(k, d);
      int expect = 0;
      for (int i = 0; i <= k; ++i) expect += binom(d, i);
      CHECK(c.dimension() == expect);
      if (d <= 5) CHECK(c == rm_from_flats(k, d));
    }
  CHECK(build_rm(2, 5).dimension() == 16);
  CHECK(build_rm(0, 3).words().size() == 2);
  CHECK(build_rm(-1, 3).dimension() == 0);
  CHECK(build_rm(7, 3).dimension() == 8);
  CHECK(build_rm(2, 5).rm_order() == 2);
}

TEST_CASE("RM duality") {
  for (int d = 1; d <= 6; ++d)
    for (int i = 0; i <= d - 1; ++i) {
      const Code a = build_rm(i, d);
      CHECK(a.orthogonal_complement() == build_rm(d - 1 - i, d));
      CHECK(dual_code(i, d) == build_rm(d - 1 - i, d));
    }
  const Code c = build_rm(2, 5);
  for (const auto& x : c.basis())
    for (const auto& y : c.basis()) CHECK_FALSE(x.dot(y));
  Code even(4);
  for (Point x = 1; x < 16; ++x) even.insert(BitWord::from_points(4, {0, x}));
  CHECK(dual_code(0, 4) == even);
}

TEST_CASE("RM minimum weight") {
  for (int d = 1; d <= 4; ++d)
    for (int k = 0; k <= d; ++k) {
      int mn = 1 << d;
      for (const auto& w : build_rm(k, d).words())
        if (!w.empty()) mn = std::min(mn, w.weight());
      CHECK(mn == (1 << (d - k)));
    }
  std::mt19937_64 rng(5);
  for (int d = 5; d <= 6; ++d)
    for (int k = 1; k < d; ++k) {
      const Code c = build_rm(k, d);
      const Code lower = build_rm(k - 1, d);
      // sample cosets of RM(k-1,d) and scan each one completely when small
      for (int s = 0; s < 40; ++s) {
        const BitWord base = c.random_word(rng);
        if (lower.dimension() <= 12) {
          for (const auto& u : lower.words()) {
            const BitWord w = base + u;
            if (!w.empty()) CHECK(w.weight() >= (1 << (d - k)));
          }
        } else {
          for (int j = 0; j < 200; ++j) {
            const BitWord w = base + lower.random_word(rng);
            if (!w.empty()) CHECK(w.weight() >= (1 << (d - k)));
          }
        }
      }
      const auto flat = AffineSubspace::coordinate(d, [&] {
        std::vector<int> b;
        for (int i = 0; i < k; ++i) b.push_back(i);
        return b;
      }(), 0);
      CHECK(c.contains(flat.word()));
      CHECK(flat.word().weight() == (1 << (d - k)));
    }
}

TEST_CASE("augmentation filtration") {
  for (int d = 1; d <= 5; ++d)
    for (int j = 0; j <= d; ++j) {
      Code img(d);
      for (const auto& w : build_rm(j, d).basis())
        for (Point c = 0; c < (Point{1} << d); ++c) img.insert(translate_commutator(w, c));
      CHECK(img == build_rm(j - 1, d));
    }
}

TEST_CASE("free module: kernel equals image of tau_c - 1") {
  for (int d = 1; d <= 5; ++d)
    for (Point c = 1; c < (Point{1} << d); ++c) {
      Code img(d);
      for (Point x = 0; x < (Point{1} << d); ++x) img.insert(translate_commutator(BitWord::point(d, x), c));
      CHECK(img.dimension() == (1 << (d - 1)));
      for (const auto& w : img.basis()) CHECK(translate_word(w, c) == w);
    }
}

TEST_CASE("X(tau - 1) lies in RM(d-2,d) up to an invariant 1-space") {
  std::mt19937_64 rng(7);
  for (int d = 2; d <= 6; ++d) {
    const Code rm = build_rm(d - 2, d);
    for (int s = 0; s < 60; ++s) {
      const BitWord x = random_subset(d, rng);
      const Point c = 1 + static_cast<Point>(rng() % ((1U << d) - 1));
      const BitWord img = translate_commutator(x, c);
      if (x.weight() % 2 == 0) {
        CHECK(rm.contains(img));
      } else {
        bool found = false;
        for (Point p = 0; p < (Point{1} << d) && !found; ++p) {
          const BitWord q = BitWord::from_points(d, {p, p ^ c});
          found = rm.contains(img + q);
        }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("weight-2 words and translation commutators") {
  for (int d = 3; d <= 6; ++d) {
    const Code rm2 = build_rm(d - 2, d);
    const Code rm3 = build_rm(d - 3, d);
    for (Point a = 0; a < (Point{1} << d); ++a)
      for (Point b = a + 1; b < (Point{1} << d); ++b) {
        const BitWord pair = BitWord::from_points(d, {a, b});
        for (Point c = 1; c < (Point{1} << d); ++c) {
          if (rm2.contains(pair)) CHECK(translate_word(pair, c) == pair);
          if (rm3.contains(translate_commutator(pair, c))) CHECK(translate_word(pair, c) == pair);
        }
      }
  }
}

TEST_CASE("word levels") {
  const auto a = AffineSubspace::coordinate(6, {0, 1}, 0);
  CHECK(word_levels(a.word()).bw_level >= 1);
  CHECK(word_levels(BitWord::point(4, 3)).rm_level == 0);
  CHECK_THROWS_AS(word_levels(BitWord(4)), Error);
  std::mt19937_64 rng(11);
  const Code r2 = build_rm(2, 6), r1 = build_rm(1, 6);
  for (int s = 0; s < 20; ++s) {
    const BitWord w = r2.random_word(rng);
    if (r1.contains(w)) continue;
    const auto lv = word_levels(w);
    CHECK(lv.rm_level == 4);
    CHECK(lv.rm_level >= 2 * lv.bw_level);
  }
}

TEST_CASE("defect and cubi sums") {
  CHECK(defect(BitWord(4)) == 0);
  CHECK(defect(cubi_codeword(5, 2).word) == 2);
  CHECK_THROWS_AS(defect(BitWord::point(4, 0)), Error);
  // a codimension-2 flat is a cubi sum with one part
  CHECK(defect(AffineSubspace::coordinate(4, {0, 1}, 0).word()) == 1);
  CHECK(defect(AffineSubspace::coordinate(4, {0}, 0).word()) == 0);
  for (int d = 2; d <= 9; ++d)
    for (int k = 1; 2 * k <= d; ++k) {
      const auto z = cubi_codeword(d, k);
      CHECK(z.word.weight() == (1 << (d - 1)) - (1 << (d - k - 1)));
      CHECK(z.core.dimension() == d - 2 * k);
      CHECK(static_cast<int>(z.parts.size()) == k);
      if (d <= 6) CHECK(defect(z.word) == k);
      for (Point c : z.core.points()) CHECK(translate_word(z.word, c) == z.word);
    }
  const auto z72 = cubi_codeword(7, 2);
  CHECK(z72.word.weight() == 48);
  CHECK(z72.core.points().size() == 8);
  CHECK_THROWS_AS(cubi_codeword(5, 3), Error);
}

TEST_CASE("translation drops RM order") {
  std::mt19937_64 rng(3);
  const Code r3 = build_rm(3, 5), r2 = build_rm(2, 5);
  for (int s = 0; s < 50; ++s) {
    const BitWord w = r3.random_word(rng);
    const Point c = static_cast<Point>(rng() % 32);
    CHECK(r2.contains(translate_commutator(w, c)));
  }
  const auto a = AffineSubspace::coordinate(5, {0, 1}, 0);
  CHECK(translate_word(a.word(), 4) == a.word());
}

TEST_CASE("quotient words") {
  const LinearSpan g(5, {16});
  CHECK(quotient_word(BitWord::full(5), g) == BitWord::full(4));
  CHECK(quotient_word(BitWord::from_points(5, {3, 19}), g) == BitWord::point(4, 3));
  CHECK_THROWS_AS(quotient_word(BitWord::point(5, 3), g), Error);
  // a Gamma-invariant word keeps its RM order on the quotient
  const LinearSpan c1(5, {1});
  for (const auto& w : build_rm(2, 5).words()) {
    if (w.empty() || translate_word(w, 1) != w) continue;
    CHECK(build_rm(2, 4).contains(quotient_word(w, c1)));
    CHECK(w.weight() >= 8);
  }
  const Code rm = build_rm(5, 5);
  for (Point x = 0; x < 32; ++x) {
    const BitWord w = BitWord::from_points(5, {x, x ^ 1});
    CHECK(rm.contains(w));
    CHECK(quotient_word(w, c1).weight() >= 1);
  }
  CHECK(rm.dimension() == 32);
}
