#include "bwc/gf2/codes.hpp"

#include <algorithm>
#include <bit>

namespace bwc::gf2 {

Code Code::span(int d, const std::vector<BitWord>& generators) {
  Code c(d);
  for (const auto& g : generators) c.insert(g);
  return c;
}

BitWord Code::reduce(BitWord w) const {
  require(w.d() == d_, Errc::mixed_ambient, "word length does not match code");
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (w.test(static_cast<Point>(pivots_[i]))) w += basis_[i];
  return w;
}

bool Code::insert(const BitWord& w) {
  BitWord r = reduce(w);
  if (r.empty()) return false;
  const int p = r.highest();
  for (auto& b : basis_)
    if (b.test(static_cast<Point>(p))) b += r;
  // insert keeping pivots descending
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p, std::greater<int>());
  const auto pos = it - pivots_.begin();
  pivots_.insert(it, p);
  basis_.insert(basis_.begin() + pos, r);
  order_.reset();
  return true;
}

bool Code::subcode_of(const Code& other) const {
  for (const auto& b : basis_)
    if (!other.contains(b)) return false;
  return true;
}

Code Code::orthogonal_complement() const {
  const int n = 1 << d_;
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : pivots_) is_pivot[static_cast<std::size_t>(p)] = true;
  Code out(d_);
  for (int q = 0; q < n; ++q) {
    if (is_pivot[static_cast<std::size_t>(q)]) continue;
    BitWord v = BitWord::point(d_, static_cast<Point>(q));
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].test(static_cast<Point>(q))) v.set(static_cast<Point>(pivots_[i]));
    out.insert(v);
  }
  return out;
}

std::vector<BitWord> Code::words() const {
  require(dimension() <= 24, Errc::size, "code too large to list");
  std::vector<BitWord> out;
  out.reserve(std::size_t{1} << dimension());
  BitWord cur(d_);
  out.push_back(cur);
  // Gray code walk
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << dimension()); ++i) {
    cur += basis_[static_cast<std::size_t>(std::countr_zero(i))];
    out.push_back(cur);
  }
  return out;
}

BitWord Code::random_word(std::mt19937_64& rng) const {
  BitWord w(d_);
  for (const auto& b : basis_)
    if (rng() & 1U) w += b;
  return w;
}

Code build_rm(int k, int d) {
  check_dim(d);
  Code c(d);
  const Point n = Point{1} << d;
  if (k >= 0) {
    for (Point t = 0; t < n; ++t) {
      if (std::popcount(t) > k) continue;
      BitWord w(d);
      for (Point x = 0; x < n; ++x)
        if ((x & t) == t) w.set(x);
      c.insert(w);
    }
  }
  c.order_ = k;
  return c;
}

Code dual_code(int k, int d) {
  require(k >= 0 && k <= d - 1, Errc::precondition, "dual_code needs 0 <= k <= d-1");
  return build_rm(d - 1 - k, d);
}

WordLevels word_levels(const BitWord& w) {
  require(!w.empty(), Errc::undefined_level, "level of the zero word");
  const int d = w.d();
  WordLevels lv{0, 0};
  for (int i = 0; i <= d; ++i)
    if (build_rm(d - i, d).contains(w)) lv.rm_level = i;
  for (int m = 0; 2 * m <= d; ++m)
    if (build_rm(d - 2 * m, d).contains(w)) lv.bw_level = m;
  return lv;
}

int defect(const BitWord& w) {
  const int d = w.d();
  require(build_rm(2, d).contains(w), Errc::membership, "defect needs a word of RM(2,d)");
  const Code rm1 = build_rm(1, d);
  std::vector<bool> seen(static_cast<std::size_t>(1 << d) + 1, false);
  for (const auto& c : rm1.words()) seen[static_cast<std::size_t>((w + c).weight())] = true;
  for (int k = 1; 2 * k <= d; ++k) {
    const int target = (1 << (d - 1)) - (1 << (d - k - 1));
    if (seen[static_cast<std::size_t>(target)]) return k;
  }
  return 0;
}

CubiDecomposition cubi_codeword(int d, int k) {
  check_dim(d);
  require(k >= 1 && 2 * k <= d, Errc::precondition, "cubi_codeword needs 1 <= k <= d/2");
  CubiDecomposition out;
  out.word = BitWord(d);
  std::vector<int> core_bits;
  for (int i = 0; i < k; ++i) {
    auto s = AffineSubspace::coordinate(d, {2 * i, 2 * i + 1}, 0);
    out.word += s.word();
    out.parts.push_back(std::move(s));
    core_bits.push_back(2 * i);
    core_bits.push_back(2 * i + 1);
  }
  out.core = AffineSubspace::coordinate(d, core_bits, 0);
  const int expected = (1 << (d - 1)) - (1 << (d - k - 1));
  require(out.word.weight() == expected, Errc::internal, "cubi sum has the wrong weight");
  return out;
}

BitWord translate_word(const BitWord& w, Point c) {
  require(c < (Point{1} << w.d()), Errc::precondition, "translation outside Omega");
  return w.translate(c);
}

BitWord quotient_word(const BitWord& w, const LinearSpan& gamma) {
  const int d = w.d();
  require(gamma.d() == d, Errc::mixed_ambient, "subspace and word over different Omega");
  const int qd = d - gamma.dimension();
  require(qd >= 1, Errc::size, "quotient space is trivial");
  std::vector<int> free_bits;
  for (int b = 0; b < d; ++b)
    if (!((gamma.pivot_mask() >> b) & 1U)) free_bits.push_back(b);
  BitWord out(qd);
  for (Point x : w.points()) {
    // saturation: the whole coset x + Gamma must lie in w
    for (Point g : gamma.basis())
      require(w.test(x ^ g), Errc::saturation, "word is not a union of cosets");
    const Point r = gamma.reduce(x);
    Point q = 0;
    for (std::size_t j = 0; j < free_bits.size(); ++j)
      if ((r >> free_bits[j]) & 1U) q |= Point{1} << j;
    out.set(q);
  }
  return out;
}

}  // namespace bwc::gf2
