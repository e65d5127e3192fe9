#pragma once

#include <optional>
#include <vector>

#include "bwc/lattice/vector.hpp"

namespace bwc::lat {

// Exact Gram matrix: entries are m(i,j) * 2^exp.
struct GramMatrix {
  IntMatrix m;
  int exp = 0;

  std::size_t size() const { return m.rows(); }
  Dyadic at(std::size_t i, std::size_t j) const { return Dyadic(m(i, j), -exp); }
  bool integral() const;
  bool even() const;
  // Entries as plain integers; requires integral().
  IntMatrix integer() const;
};

// A lattice in Q (x) BW_d, stored as the row HNF of 2^scale * (basis), with
// the scale as small as possible. The stored form is canonical: two lattices
// are equal iff their (d, scale, basis) agree.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(int d);  // zero lattice

  int d() const { return d_; }
  Ambient ambient() const { return {d_}; }
  std::size_t rank() const { return b_.rows(); }
  int scale() const { return s_; }
  const IntMatrix& int_basis() const { return b_; }
  const std::vector<std::size_t>& pivots() const { return piv_; }
  // A known D > 0 with D*e_j (integer units at this scale) in the lattice for
  // every support coordinate j. Not part of the value.
  const std::optional<Int>& modulus_hint() const { return mod_; }

  DyadicVector basis_vector(std::size_t i) const;
  std::vector<DyadicVector> basis() const;
  // Coordinates that are nonzero on some lattice vector.
  gf2::BitWord support() const;

  bool contains(const DyadicVector& x) const;
  // Integer coefficients of x with respect to the canonical basis.
  std::optional<std::vector<Int>> coefficients(const DyadicVector& x) const;
  bool contains_lattice(const Lattice& o) const;
  DyadicVector combination(const std::vector<Int>& coeffs) const;

  Lattice scaled_pow2(int k) const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.d_ == b.d_ && a.s_ == b.s_ && a.b_ == b.b_;
  }

 private:
  friend class LatticeBuilder;
  int d_ = 0;
  int s_ = 0;
  IntMatrix b_;
  std::vector<std::size_t> piv_;
  std::optional<Int> mod_;
};

// Collects generators given as integer vectors at a fixed scale.
class LatticeBuilder {
 public:
  // With `modulus`, D*e_j at this scale must lie in the final lattice for every
  // column j of `support` (all columns when support is null), and every
  // generator must vanish off the support.
  LatticeBuilder(int d, int scale, std::optional<Int> modulus = std::nullopt, const gf2::BitWord* support = nullptr);

  int scale() const { return scale_; }
  void add(const std::vector<Int>& v);
  void add(const std::vector<std::int64_t>& v);
  void add(const DyadicVector& x);
  void add(const Lattice& l);
  Lattice finish() const;

 private:
  int d_, scale_;
  std::optional<Int> mod_;
  std::vector<std::size_t> cols_;  // builder column -> ambient coordinate
  std::vector<long> where_;        // ambient coordinate -> builder column or -1
  linalg::HnfBuilder hnf_;
};

// Canonical lattice spanned by the generators. Throws mixed_ambient.
Lattice make_lattice(int d, const std::vector<DyadicVector>& gens);
// The lattice spanned by rows / 2^scale.
Lattice lattice_from_rows(int d, int scale, const IntMatrix& rows, std::optional<Int> modulus = std::nullopt);

GramMatrix gram(const Lattice& l);
GramMatrix gram_of(int d, const std::vector<DyadicVector>& vs);
Dyadic det(const Lattice& l);
bool is_integral(const Lattice& l);
bool is_even(const Lattice& l);

// Dual inside the rational span. Throws non_dyadic if it leaves Z[1/2].
Lattice dual(const Lattice& l);
Lattice sum(const Lattice& a, const Lattice& b);
Lattice intersect(const Lattice& a, const Lattice& b);
// |L : sub| for sub inside L of equal rank.
Int index_in(const Lattice& sub, const Lattice& l);

// L ∩ (coordinates in keep), and the orthogonal projection of L onto them.
Lattice coordinate_section(const Lattice& l, const gf2::BitWord& keep);
Lattice coordinate_projection(const Lattice& l, const gf2::BitWord& keep);

// L(q) = 2^{-q} M ∩ L
Lattice level_sublattice(const Lattice& l, const Lattice& m, int q);

// Z^{2^d} spanned by the v_i.
Lattice standard_lattice(int d);

}  // namespace bwc::lat
