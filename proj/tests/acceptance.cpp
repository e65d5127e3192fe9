#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "bwc/cousins/cousins.hpp"
#include "bwc/gf2/codes.hpp"

using namespace bwc;
using brw::MonomialIsometry;
using gf2::BitWord;
using gf2::Code;
using gf2::Point;
using lat::Dyadic;
using lat::Int;
using lat::Lattice;

namespace {

// Collects failed checks of one criterion; notes go to the summary line.
struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string cat(auto&&... xs) {
  std::ostringstream os;
  (os << ... << xs);
  return os.str();
}

std::uint32_t mask(const BitWord& w) {
  std::uint32_t m = 0;
  for (Point p : w.points()) m |= std::uint32_t{1} << p;
  return m;
}

// minimum weight over all nonzero codewords, Gray-code order; 2^d <= 32
int min_weight(const Code& c) {
  std::vector<std::uint32_t> b;
  for (const auto& w : c.basis()) b.push_back(mask(w));
  if (b.size() + 1 >= std::size_t{1} << c.d()) {
    // full space or the even-weight code
    bool even = true;
    for (auto x : b) even &= std::popcount(x) % 2 == 0;
    return b.size() == std::size_t{1} << c.d() ? 1 : even ? 2 : 1;
  }
  int best = 1 << c.d();
  std::uint32_t cur = 0;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << b.size()); ++i) {
    cur ^= b[static_cast<std::size_t>(std::countr_zero(i))];
    best = std::min(best, std::popcount(cur));
  }
  return best;
}

MonomialIsometry functional_sign(int d, Point a) {
  BitWord w(d);
  for (Point x = 0; x < (Point{1} << d); ++x)
    if (std::popcount(a & x) & 1) w.set(x);
  return MonomialIsometry::sign_change(w);
}

std::vector<lat::DyadicVector> both_signs(const lat::ShortVectors& sv) {
  std::vector<lat::DyadicVector> out;
  for (const auto& p : sv.pairs) {
    out.push_back(p.v);
    out.push_back(-p.v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void reed_muller(Check& ok) {
  for (int d = 1; d <= 5; ++d) {
    for (int i = 0; i <= d - 1; ++i)
      ok(gf2::build_rm(i, d).orthogonal_complement() == gf2::build_rm(d - 1 - i, d), cat("RM(", i, ",", d, ") duality"));
    for (int k = 0; k <= d; ++k)
      ok(min_weight(gf2::build_rm(k, d)) == 1 << (d - k), cat("RM(", k, ",", d, ") minimum weight"));
    for (int j = 0; j <= d; ++j) {
      Code img(d);
      for (const auto& w : gf2::build_rm(j, d).basis())
        for (Point c = 0; c < (Point{1} << d); ++c) img.insert(gf2::translate_commutator(w, c));
      ok(img == gf2::build_rm(j - 1, d), cat("augmentation filtration j = ", j, ", d = ", d));
    }
    for (Point c = 1; c < (Point{1} << d); ++c) {
      Code img(d);
      for (Point x = 0; x < (Point{1} << d); ++x) img.insert(gf2::translate_commutator(BitWord::point(d, x), c));
      bool fixed = true;
      for (const auto& w : img.basis()) fixed &= gf2::translate_word(w, c) == w;
      // the tau_c-fixed words have dimension 2^{d-1}
      ok(fixed && img.dimension() == 1 << (d - 1), cat("free module d = ", d, ", c = ", c));
    }
  }
  std::size_t n = 0;
  for (int d = 2; d <= 9; ++d)
    for (int k = 1; 2 * k <= d; ++k, ++n)
      ok(gf2::cubi_codeword(d, k).word.weight() == (1 << (d - 1)) - (1 << (d - k - 1)), cat("cubi weight ", d, ",", k));
  ok.note(cat(n, " cubi sums"));
}

void barnes_wall(Check& ok) {
  for (int d = 3; d <= 7; ++d) {
    const auto& l = bw::build_bw(d);
    const Dyadic want = d % 2 ? Dyadic(1) : Dyadic::pow2(1 << (d - 1));
    ok(lat::det(l) == want, cat("det BW_", d));
  }
  for (int d = 2; d <= 7; ++d) ok(lat::is_even(bw::build_bw(d)), cat("BW_", d, " even"));
  for (int d = 1; d <= 5; ++d)
    ok(lat::min_norm(bw::build_bw(d)).norm == Dyadic::pow2(d / 2), cat("min norm BW_", d));
  for (int d = 1; d <= 4; ++d) {
    const auto& l = bw::build_bw(d);
    ok(bw::standard_minimal_vectors(d) == both_signs(lat::enumerate_short(l, Dyadic::pow2(d / 2))),
       cat("minimal vectors of BW_", d));
  }
  for (int d = 2; d <= 4; ++d) {
    const auto l1 = bw::twist(bw::build_bw(d), 1, brw::standard_fourvolution(d).f);
    ok(bw::bw_twist_minvecs(d) == both_signs(lat::enumerate_short(l1, Dyadic::pow2(d / 2 + 1))),
       cat("minimal vectors of BW_", d, "[1]"));
  }
  ok.note("twisted minimal vectors checked for d <= 4");
}

void jordan(Check& ok) {
  for (int d = 2; d <= 6; ++d) {
    const auto& l = bw::build_bw(d);
    ok(brw::jordan_number(l, MonomialIsometry::minus_one(d)) == 0, cat("JNo(-1), d = ", d));
    for (const auto& g : {MonomialIsometry::translation(d, 1), functional_sign(d, 1), MonomialIsometry::translation(d, 3)})
      ok(brw::jordan_number(l, g) == 1 << (d - 2), cat("lower noncentral JNo, d = ", d));
    for (int k = 1; d - 2 * k >= 1; ++k) {
      const auto t = brw::make_involution(gf2::cubi_codeword(d, k)).t;
      const int j = brw::jordan_number(l, t);
      ok(j == (1 << (d - 1)) - (1 << (d - k - 1)), cat("JNo defect ", k, ", d = ", d));
      ok(lat::index_in(bw::eigen_data(l, t).tel, l) == Int(1) << j, cat("Tel index, d = ", d, ", k = ", k));
    }
  }
}

void discriminants(Check& ok) {
  const auto& l = bw::build_bw(5);
  for (int k = 1; k <= 2; ++k) {
    const auto t = brw::make_involution(gf2::cubi_codeword(5, k)).t;
    const auto e = bw::eigen_data(l, t);
    const std::size_t r = 16 - (std::size_t{1} << (4 - k));
    ok(lat::discriminant_group(e.plus) == std::vector<Int>(r, Int(2)), cat("D(L^+), k = ", k));
    ok(lat::discriminant_group(e.minus) == std::vector<Int>(r, Int(2)), cat("D(L^-), k = ", k));
    ok(e.minus == bw::commutator_sublattice(l, t), cat("L^- = [L,t], k = ", k));
    ok(bw::projected_lattice(l, t, -1).scaled_pow2(1).contains_lattice(e.minus), cat("L^- in 2P^-, k = ", k));
    ok.note(cat("k = ", k, ": (Z/2)^", r));
  }
}

void headline(Check& ok) {
  for (auto [d, k] : {std::pair{5, 1}, {5, 2}, {7, 2}})
    for (int e : {-1, 1}) {
      const auto r = cousins::verify_cousin(d, k, e);
      std::size_t skipped = 0, bounded = 0;
      for (const auto& c : r.claims) {
        ok(c.status != cousins::Status::fail, cat("MC_1(", d, ",", k, ",", e > 0 ? "+" : "-", ") ", c.name, ": ", c.computed));
        skipped += c.status == cousins::Status::skipped_budget;
        bounded += c.status == cousins::Status::bounded;
      }
      ok(r.rank == cousins::cousin_rank(d, k, e) && r.det == "1", cat("MC_1(", d, ",", k, ") rank/det"));
      std::string tag = cat(d, k, e > 0 ? "+" : "-", " mu ", r.min_norm);
      if (skipped) tag += cat(", ", skipped, " skipped-budget");
      if (bounded) tag += cat(", ", bounded, " bounded");
      ok.note(tag);
      if (d == 5 && k == 1) {
        const auto lat5 = cousins::mc1(5, 1, e).lattice;
        ok(lat::enumerate_short(lat5, Dyadic(2)).total == (e < 0 ? 240u : 720u), "kissing at (5,1)");
        const auto dec = lat::decompose(lat5);
        ok(dec.components.size() == (e < 0 ? 1u : 3u), "component count at (5,1)");
        for (const auto& c : dec.components)
          ok(lat::gram_isometric(c, bw::build_bw(3)).status == lat::IsoStatus::isometric, "component is BW_3");
      }
      if (d == 5 && k == 2) ok(!r.even, "(5,2) odd");
      if (d == 7) {
        ok(r.even, "(7,2) even");
        const auto l1 = cousins::level1_short_vectors(d, k, e);
        // level <= 1 and norm < 4 means v_i / 2, since level-0 norms are >= 8
        ok(l1.no_half_units, "no vector of norm < 4 at levels <= 1");
      }
    }
}

void structure(Check& ok) {
  for (int e : {1, -1}) {
    const auto c = cousins::mc1(7, 2, e);
    const auto l1 = cousins::level1_short_vectors(c);
    ok(l1.all_minimal_norm && !l1.vectors.empty(), "level-1 vectors have norm 4");
    // membership oracle: L is unimodular, so x is in L iff (x, b) is integral for every basis vector b
    std::vector<lat::DyadicVector> oracle;
    const auto pts = c.region.points();
    const auto& core = c.t.core.direction_space();
    const auto basis = c.lattice.basis();
    for (Point i : pts)
      for (Point j : pts) {
        if (j <= i || !core.contains(i ^ j)) continue;
        for (int sg : {1, -1}) {
          auto x = lat::DyadicVector::unit(7, i);
          auto y = lat::DyadicVector::unit(7, j);
          x = sg > 0 ? x + y : x - y;
          x.mul_pow2(-1);
          bool in = true;
          for (const auto& b : basis) in = in && x.inner(b).is_integer();
          if (in) {
            oracle.push_back(x);
            oracle.push_back(-x);
          }
        }
      }
    std::sort(oracle.begin(), oracle.end());
    ok(oracle == l1.vectors, "census matches the membership oracle");
    ok(l1.vectors.size() == 112 * l1.components.size(), "census size = 112 per D_8 component");
    for (auto s : l1.component_is_scaled_d) ok(s == lat::IsoStatus::isometric, "component is scaled D_8");
    ok.note(cat(e > 0 ? "+" : "-", ": ", l1.vectors.size(), " vectors, ", l1.components.size(), " x D_8"));
  }
  const auto tf = cousins::top_form_check_level(cousins::mc1(7, 2, 1), 2, 1000, 1);
  ok(tf.samples == 1000 && tf.counterexamples.empty(), "top form on 1000 level-2 samples");
  for (auto [d, k] : {std::pair{5, 1}, {5, 2}, {7, 2}})
    for (int e : {1, -1}) {
      const auto a = cousins::mc1(d, k, e);
      const auto b = cousins::mc1_with(d, k, e, brw::alternate_fourvolution(a.t));
      ok(!(a.f.f == b.f.f) && a.lattice == b.lattice, cat("f-independence at (", d, ",", k, ")"));
    }
}

void two_four(Check& ok) {
  for (int d = 2; d <= 5; ++d) {
    const auto& l = bw::build_bw(d);
    const auto f = brw::standard_fourvolution(d);
    const auto p = brw::lower_dihedral_pair(f);
    const auto m1 = MonomialIsometry::minus_one(d);
    for (const auto& u : {p.u, p.u * m1})
      for (const auto& v : {p.v, p.v * m1}) ok(bw::check_two_four(l, {u, v}), cat("2/4 generation, d = ", d));
    ok(bw::lower_commutator(l) == bw::commutator_sublattice(l, f.f), cat("commutator density, d = ", d));
  }
}

void leech(Check& ok) {
#ifdef BWC_ENABLE_LEECH
  const auto r = cousins::leech_cousin();
  ok(r.found, "search found a candidate");
  if (r.found) {
    ok(r.lattice.rank() == 24 && r.even && r.unimodular, "even unimodular rank 24");
    ok(r.min_norm && *r.min_norm == Dyadic(4), "minimum norm 4");
    ok(r.kissing && *r.kissing == 196560, "kissing number 196560");
    ok.note(r.method);
  }
  std::istringstream in(r.diagnostics);
  for (std::string line; std::getline(in, line);) std::cout << "    " << line << "\n";
#else
  ok(false, "built without BWC_ENABLE_LEECH");
#endif
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"Reed-Muller suite", reed_muller},
      {"Barnes-Wall suite", barnes_wall},
      {"Jordan-number suite", jordan},
      {"discriminant suite", discriminants},
      {"cousin headline suite", headline},
      {"structure-theorem suite", structure},
      {"2/4 and commutator-density suite", two_four},
      {"Leech stretch", leech},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check ok;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(ok);
    } catch (const std::exception& e) {
      ok(false, cat("exception: ", e.what()));
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = ok.failures.empty();
    failed += !pass;
    std::printf("%s %zu %s (%.1f s)", pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), s);
    for (std::size_t j = 0; j < ok.notes.size(); ++j) std::printf("%s%s", j ? "; " : " [", ok.notes[j].c_str());
    std::printf("%s\n", ok.notes.empty() ? "" : "]");
    for (const auto& f : ok.failures) std::printf("    failed: %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
