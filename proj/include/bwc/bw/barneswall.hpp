#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bwc/brw/involution.hpp"
#include "bwc/lattice/lattice.hpp"

namespace bwc::bw {

using brw::MonomialIsometry;
using lat::DyadicVector;
using lat::Lattice;

// BW_d = span of 2^{-m} v_A over affine 2m-spaces A, built as the closure of
// one coordinate flat per m under AGL(d,2). Cached per d; 1 <= d <= 9.
const Lattice& build_bw(int d);

// {2^{-m} v_A eps_S : A affine 2m-space, S in RM(2,d)}, both signs, sorted. d <= 5.
std::vector<DyadicVector> standard_minimal_vectors(int d);
// {2^{-m} v_A eps_S : A affine (2m+1)-space, S in RM(2,d)}, both signs, sorted. d <= 5.
std::vector<DyadicVector> bw_twist_minvecs(int d);

// L(f - 1)^p, p >= 0.
Lattice twist(const Lattice& l, int p, const MonomialIsometry& f);

// x(1 + eps t) / 2
DyadicVector project(const DyadicVector& x, const MonomialIsometry& t, int eps);
// {x in L : x t = eps x}
Lattice eigenlattice(const Lattice& l, const MonomialIsometry& t, int eps);
// P^eps(L)
Lattice projected_lattice(const Lattice& l, const MonomialIsometry& t, int eps);

struct EigenData {
  Lattice plus, minus, tel;
};
EigenData eigen_data(const Lattice& l, const MonomialIsometry& t);

// span of x(g - 1), x in L
Lattice commutator_sublattice(const Lattice& l, const MonomialIsometry& g);
// [L, R_d] from the generators eps_{x_j = 1}, -1 and tau_{e_j} of the lower group.
Lattice lower_commutator(const Lattice& l);

// L^+(u) + L^+(v) == L; throws group_shape if u, v are not a dihedral pair.
bool check_two_four(const Lattice& l, const brw::DihedralPair& p);

struct TopClosureWitness {
  DyadicVector x, top;
  bool x_in_lattice = false;
  bool top_in_lattice = false;
  std::string description;
};
// Searches pairs of affine 4-spaces A, B of F_2^d meeting in one point for
// x = (v_A + v_B)/4 in BW_d with top(x) outside BW_d. d >= 8.
std::optional<TopClosureWitness> find_top_closure_failure(int d, int max_pairs = 64);

}  // namespace bwc::bw
