#pragma once

#include <optional>
#include <random>
#include <vector>

#include "bwc/gf2/affine.hpp"
#include "bwc/gf2/bitword.hpp"

namespace bwc::gf2 {

// Binary linear code of length 2^d with a fully reduced echelon basis
// (pivot = highest set point), so two codes are equal iff their bases are.
class Code {
 public:
  Code() = default;
  explicit Code(int d) : d_(d) { check_dim(d); }

  static Code span(int d, const std::vector<BitWord>& generators);

  int d() const { return d_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  // Set for codes produced by build_rm.
  std::optional<int> rm_order() const { return order_; }
  const std::vector<BitWord>& basis() const& { return basis_; }
  std::vector<BitWord> basis() && { return std::move(basis_); }

  BitWord reduce(BitWord w) const;
  bool contains(const BitWord& w) const { return reduce(w).empty(); }
  bool insert(const BitWord& w);
  bool subcode_of(const Code& other) const;
  Code orthogonal_complement() const;

  // Every codeword; guarded to dimension <= 24.
  std::vector<BitWord> words() const;
  BitWord random_word(std::mt19937_64& rng) const;

  friend bool operator==(const Code& a, const Code& b) { return a.d_ == b.d_ && a.basis_ == b.basis_; }

 private:
  friend Code build_rm(int k, int d);
  int d_ = 0;
  std::optional<int> order_;
  std::vector<BitWord> basis_;  // sorted by pivot, descending
  std::vector<int> pivots_;
};

// RM(k,d), spanned by the monomial functions prod_{i in T} x_i, |T| <= k.
// k < 0 gives the zero code; k >= d the full space.
Code build_rm(int k, int d);

// RM(k,d)^perp, which equals RM(d-1-k, d).
Code dual_code(int k, int d);

struct WordLevels {
  int rm_level;  // max{i : w in RM(d-i, d)}
  int bw_level;  // max{m >= 0 : w in RM(d-2m, d)}
};
WordLevels word_levels(const BitWord& w);

// Defect of an RM(2,d) codeword, by exhausting the coset w + RM(1,d).
int defect(const BitWord& w);

// Boolean sum of k affine codimension-2 subspaces with a common point.
struct CubiDecomposition {
  std::vector<AffineSubspace> parts;
  BitWord word;
  AffineSubspace core;
};

// Canonical cubi sum with S_i = {x : x_{2i-1} = x_{2i} = 0}.
CubiDecomposition cubi_codeword(int d, int k);

BitWord translate_word(const BitWord& w, Point c);

// w(tau_c - 1) = w + w tau_c
inline BitWord translate_commutator(const BitWord& w, Point c) { return w + w.translate(c); }

// Image of a Gamma-saturated word in P(Omega / Gamma). Quotient coordinates
// are the non-pivot bits of Gamma's reduced basis, in increasing order.
BitWord quotient_word(const BitWord& w, const LinearSpan& gamma);

}  // namespace bwc::gf2
