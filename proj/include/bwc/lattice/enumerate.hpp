#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "bwc/lattice/lattice.hpp"

namespace bwc::lat {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;

struct LllResult {
  IntMatrix transform;  // reduced basis = transform * basis
  IntMatrix gram;       // Gram of the reduced basis
};

// Integral LLL (delta = 3/4) on a positive definite integer Gram matrix.
LllResult lll_gram(const IntMatrix& g);

// Fraction-free LDL^T data: delta[i] = leading i x i minor, lambda(i,j) for j < i.
struct IntegralLdl {
  std::vector<Int> delta;  // size r+1, delta[0] = 1
  IntMatrix lambda;
};
IntegralLdl integral_ldl(const IntMatrix& g);

// Exact Fincke-Pohst over a positive definite integer Gram matrix. Calls
// visit(coeffs, norm) once per +-pair with 0 < norm <= bound; the callback may
// return a smaller bound. Throws budget once more than `budget` nodes are visited.
struct EnumStats {
  std::uint64_t nodes = 0;
};
using EnumVisitor = std::function<std::optional<Rat>(const std::vector<std::int64_t>&, const Int&)>;
EnumStats enumerate_gram(const IntMatrix& g, Rat bound, const EnumVisitor& visit, std::uint64_t budget = kDefaultBudget);

struct ShortVector {
  DyadicVector v;
  Dyadic norm;
};

struct ShortVectors {
  std::vector<ShortVector> pairs;  // one per +-pair: first nonzero coordinate positive
  std::uint64_t total = 0;         // number of vectors, counting both signs
  std::uint64_t nodes = 0;
};

// Sorted by norm, then coordinates.
ShortVectors enumerate_short(const Lattice& l, const Dyadic& bound, std::uint64_t budget = kDefaultBudget);

struct MinNorm {
  Dyadic norm;
  DyadicVector witness;
  std::uint64_t nodes = 0;
};
MinNorm min_norm(const Lattice& l, std::uint64_t budget = kDefaultBudget);

struct ThetaSeries {
  Dyadic bound;
  std::map<Dyadic, std::uint64_t> counts;  // includes counts[0] = 1
  friend bool operator==(const ThetaSeries&, const ThetaSeries&) = default;
};
ThetaSeries theta(const Lattice& l, const Dyadic& bound, std::uint64_t budget = kDefaultBudget);
ThetaSeries theta_gram(const IntMatrix& g, const Dyadic& bound, std::uint64_t budget = kDefaultBudget);

// The LLL-reduced basis of l, as lattice vectors.
std::vector<DyadicVector> reduced_basis(const Lattice& l);

}  // namespace bwc::lat
