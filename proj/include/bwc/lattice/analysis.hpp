#pragma once

#include <string>
#include <vector>

#include "bwc/lattice/enumerate.hpp"

namespace bwc::lat {

// Invariant factors of dual(L)/L (those > 1); requires L integral.
std::vector<Int> discriminant_group(const Lattice& l);

struct Decomposition {
  std::vector<Lattice> components;  // sorted by rank, then canonical basis
  Int index = 1;                     // |L : sum of components|
  std::size_t indecomposables = 0;   // +- pairs examined
};

// Orthogonal decomposition into indecomposable summands, from the
// indecomposable vectors of norm up to the largest LLL diagonal entry.
Decomposition decompose(const Lattice& l, std::uint64_t budget = kDefaultBudget);

enum class IsoStatus { isometric, not_isometric, evidence_only };

struct IsometryResult {
  IsoStatus status = IsoStatus::not_isometric;
  IntMatrix witness;  // W with W G2 W^T = G1 (canonical bases)
  std::string reason;
};

// Isometry of positive definite integer Gram matrices (rank <= 12 searched;
// above that only fingerprints are compared).
IsometryResult gram_isometric(const IntMatrix& g1, const IntMatrix& g2, std::uint64_t budget = kDefaultBudget);
// Same for lattices in any ambients; Gram values are compared exactly.
IsometryResult gram_isometric(const Lattice& l1, const Lattice& l2, std::uint64_t budget = kDefaultBudget);

std::string to_string(IsoStatus s);

// Gram matrices of reference lattices.
IntMatrix e8_gram();
IntMatrix d_gram(int n);  // D_n root lattice, n >= 2

}  // namespace bwc::lat
