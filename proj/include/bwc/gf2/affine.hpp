#pragma once

#include <functional>
#include <vector>

#include "bwc/gf2/bitword.hpp"

namespace bwc::gf2 {

// Reduced echelon basis of a linear subspace of F_2^d, pivot = highest set bit.
// Reducing a point against it clears every pivot bit, which gives a canonical
// coset representative.
class LinearSpan {
 public:
  LinearSpan() = default;
  // Throws precondition if the generators are dependent and `require_independent`.
  LinearSpan(int d, const std::vector<Point>& generators, bool require_independent = false);

  int d() const { return d_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<Point>& basis() const { return basis_; }
  Point pivot_mask() const { return pivot_mask_; }

  Point reduce(Point x) const;
  bool contains(Point x) const { return reduce(x) == 0; }
  // Adds x; returns false if it was already in the span.
  bool insert(Point x);

  friend bool operator==(const LinearSpan&, const LinearSpan&) = default;

 private:
  int d_ = 0;
  std::vector<Point> basis_;  // sorted by pivot, descending
  Point pivot_mask_ = 0;
};

class AffineSubspace {
 public:
  AffineSubspace() = default;
  // Directions must be linearly independent.
  AffineSubspace(int d, Point basepoint, const std::vector<Point>& directions);

  // {x : x_i = values_i for each coordinate index i in `fixed`} (0-based bit indices).
  static AffineSubspace coordinate(int d, const std::vector<int>& fixed_bits, Point values);

  int d() const { return directions_.d(); }
  int dimension() const { return directions_.dimension(); }
  Point basepoint() const { return basepoint_; }
  const std::vector<Point>& directions() const { return directions_.basis(); }
  const LinearSpan& direction_space() const { return directions_; }

  bool contains(Point x) const { return directions_.reduce(x ^ basepoint_) == 0; }
  BitWord word() const;
  std::vector<Point> points() const;

  friend bool operator==(const AffineSubspace&, const AffineSubspace&) = default;

 private:
  LinearSpan directions_;
  Point basepoint_ = 0;  // reduced: zero on every pivot bit
};

// Calls f(basis) for every m-dimensional linear subspace of F_2^d; basis is in
// reduced echelon form.
void for_each_linear_subspace(int d, int m, const std::function<void(const std::vector<Point>&)>& f);
void for_each_affine_subspace(int d, int m, const std::function<void(const AffineSubspace&)>& f);

// Number of m-dimensional linear subspaces of F_2^d (Gaussian binomial).
std::uint64_t gaussian_binomial2(int d, int m);

}  // namespace bwc::gf2
