#pragma once

#include <optional>
#include <string>

#include "bwc/brw/isometry.hpp"
#include "bwc/gf2/codes.hpp"

namespace bwc::brw {

struct InvolutionSpec {
  int d = 0;
  int k = 0;
  BitWord z;
  MonomialIsometry t;  // epsilon_Z
  gf2::AffineSubspace core;
  long trace = 0;
};

struct FourvolutionSpec {
  BitWord h;  // affine hyperplane
  Point c = 0;
  MonomialIsometry f;  // epsilon_H tau_c
};

// t = epsilon_Z for a short defect-k word Z, from its cubi sum.
InvolutionSpec make_involution(const gf2::CubiDecomposition& cubi);
// f = epsilon_H tau_c; H must contain no translate of c, i.e. H + c is the complement of H.
FourvolutionSpec make_fourvolution(const BitWord& h, Point c);

// H = {x_d = 0}, c = e_d: a lower fourvolution for any d.
FourvolutionSpec standard_fourvolution(int d);

struct StandardPair {
  InvolutionSpec t;
  FourvolutionSpec f;
};

// Z = canonical cubi word, c = last unit point, H = {x_d = 0}.
StandardPair standard_pair(int d, int k);
// Another admissible f: c = e_d (+ e_{d-1} when the core allows it),
// H = {x_1 + x_d = 1}. For testing that results do not depend on f.
FourvolutionSpec alternate_fourvolution(const InvolutionSpec& t);

// A dihedral group of order 8 generated by involutions u, v with (uv)^2 = -1.
struct DihedralPair {
  MonomialIsometry u, v;
};
// Throws group_shape unless u, v generate a dihedral group of order 8 whose
// central involution is -1.
void check_dihedral(const DihedralPair& p);
// u = epsilon_H, v = tau_c for the standard fourvolution data (f = uv).
DihedralPair lower_dihedral_pair(const FourvolutionSpec& f);

// Split/nonsplit for involutions of the monomial BRW group, by searching
// the centraliser in R_d for an elementary abelian subgroup of order 2^{d+1}.
bool is_split(const MonomialIsometry& t);

struct NonsplitWitness {
  MonomialIsometry t;
  std::string description;
};
// First upper nonsplit involution found among eps_S * (affine involution),
// S in RM(2,d); d <= 4.
std::optional<NonsplitWitness> find_nonsplit_involution(int d);

}  // namespace bwc::brw
