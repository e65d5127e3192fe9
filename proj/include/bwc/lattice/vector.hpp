#pragma once

#include <optional>
#include <vector>

#include "bwc/gf2/bitword.hpp"
#include "bwc/linalg/dyadic.hpp"
#include "bwc/linalg/matrix.hpp"

namespace bwc::lat {

using linalg::Dyadic;
using linalg::Int;
using linalg::IntMatrix;
using linalg::Rat;

// Q (x) BW_d with (v_i, v_j) = 2^{floor(d/2)} delta_ij.
struct Ambient {
  int d = 0;
  int dim() const { return 1 << d; }
  int scale_log2() const { return d / 2; }
  friend bool operator==(const Ambient&, const Ambient&) = default;
};

class DyadicVector {
 public:
  DyadicVector() = default;
  explicit DyadicVector(int d);
  DyadicVector(int d, std::vector<Dyadic> coords);
  // ints / 2^scale
  static DyadicVector from_ints(int d, const std::vector<Int>& ints, int scale);
  static DyadicVector unit(int d, gf2::Point i);
  // 2^{-m} v_A, with the coordinates in `signs` negated
  static DyadicVector from_word(const gf2::BitWord& a, int m, const gf2::BitWord* signs = nullptr);

  int d() const { return d_; }
  Ambient ambient() const { return {d_}; }
  std::size_t size() const { return c_.size(); }
  const Dyadic& operator[](std::size_t i) const { return c_[i]; }
  Dyadic& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Dyadic>& coords() const { return c_; }

  bool is_zero() const;
  // Largest coordinate exponent; 0 for integral vectors.
  int denominator_log2() const;
  // 2^scale * x as integers; throws non_dyadic if not integral at that scale.
  std::vector<Int> to_ints(int scale) const;

  Dyadic norm() const { return inner(*this); }
  Dyadic inner(const DyadicVector& o) const;

  DyadicVector& operator+=(const DyadicVector& o);
  DyadicVector& operator-=(const DyadicVector& o);
  DyadicVector& mul_pow2(int k);
  DyadicVector& operator*=(const Int& k);
  friend DyadicVector operator+(DyadicVector a, const DyadicVector& b) { return a += b; }
  friend DyadicVector operator-(DyadicVector a, const DyadicVector& b) { return a -= b; }
  DyadicVector operator-() const;

  friend bool operator==(const DyadicVector&, const DyadicVector&) = default;
  friend bool operator<(const DyadicVector& a, const DyadicVector& b);

 private:
  int d_ = 0;
  std::vector<Dyadic> c_;
};

struct LevelTop {
  int level;
  DyadicVector top;
};

// Level and top with respect to the standard basis {v_i}.
LevelTop level_and_top(const DyadicVector& x);

// Level of a nonzero scalar: -min{i : a_i != 0} in its 2-adic expansion.
int scalar_level(const Dyadic& c);

}  // namespace bwc::lat
