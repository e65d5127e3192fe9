#pragma once

#include <optional>
#include <vector>

#include "bwc/gf2/affine.hpp"
#include "bwc/lattice/lattice.hpp"

namespace bwc::brw {

using gf2::BitWord;
using gf2::Point;
using lat::DyadicVector;
using lat::Lattice;

// v_i -> (-1)^{[i in S]} v_{i A + b}: signs first, then the affine map.
// Row j of `linear` is the image of the j-th unit point. Right action:
// x(gh) = (xg)h.
class MonomialIsometry {
 public:
  MonomialIsometry() = default;
  MonomialIsometry(BitWord sign, std::vector<Point> linear, Point translate);

  static MonomialIsometry identity(int d);
  static MonomialIsometry minus_one(int d);
  static MonomialIsometry sign_change(const BitWord& s);  // epsilon_S
  static MonomialIsometry translation(int d, Point c);    // tau_c
  static MonomialIsometry linear_map(int d, std::vector<Point> rows);

  int d() const { return sign_.d(); }
  const BitWord& sign() const { return sign_; }
  const std::vector<Point>& linear() const { return lin_; }
  Point translate() const { return shift_; }

  Point image(Point i) const;
  bool linear_is_identity() const;
  bool is_diagonal() const { return linear_is_identity() && shift_ == 0; }
  // Monomial part of the BRW group: S in RM(2,d).
  bool in_brw() const;
  // Lower (extraspecial) group: S in RM(1,d), linear part trivial.
  bool is_lower() const;

  DyadicVector apply(const DyadicVector& x) const;
  MonomialIsometry operator*(const MonomialIsometry& h) const;  // first this, then h
  MonomialIsometry inverse() const;
  MonomialIsometry pow(int n) const;
  bool is_involution() const;

  long trace() const;
  // Signed permutation matrix: row i is the image of v_i.
  lat::IntMatrix matrix() const;

  friend bool operator==(const MonomialIsometry&, const MonomialIsometry&) = default;

 private:
  BitWord sign_;
  std::vector<Point> lin_;
  Point shift_ = 0;
};

// Points of an affine hyperplane given as a word; throws precondition otherwise.
void check_hyperplane(const BitWord& h);

// Image lattice Lg.
Lattice apply(const MonomialIsometry& g, const Lattice& l);
bool is_invariant(const Lattice& l, const MonomialIsometry& g);
// Matrix of g on the canonical basis of L: row i = coefficients of b_i g.
lat::IntMatrix action_matrix(const Lattice& l, const MonomialIsometry& g);

// Rank over F_2 of (t - 1) on L/2L.
int jordan_number(const Lattice& l, const MonomialIsometry& t);

}  // namespace bwc::brw
