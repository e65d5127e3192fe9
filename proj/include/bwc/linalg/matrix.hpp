#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bwc::linalg {

using Int = mpz_class;
using Rat = mpq_class;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  T* row(std::size_t i) { return a_.data() + i * cols_; }
  const T* row(std::size_t i) const { return a_.data() + i * cols_; }
  std::vector<T> row_vector(std::size_t i) const { return {row(i), row(i) + cols_}; }
  void append_row(const std::vector<T>& r);
  void swap_rows(std::size_t i, std::size_t j);
  Matrix transpose() const;
  Matrix take_rows(std::size_t n) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);

RatMatrix to_rational(const IntMatrix& m);
std::string to_string(const IntMatrix& m);

struct HnfResult {
  IntMatrix h;  // nonzero rows of the Hermite form
  IntMatrix u;  // square unimodular; the first h.rows() rows of U*M are h, the rest vanish
};

// Row-style Hermite normal form: pivots positive, strictly increasing columns,
// entries above a pivot reduced into [0, pivot).
IntMatrix hnf(const IntMatrix& m);
HnfResult hnf_with_transform(const IntMatrix& m);

// Invariant factors d_1 | d_2 | ... of the nonzero part.
std::vector<Int> snf(const IntMatrix& m);

// Basis (rows) of the saturated left kernel {x : xM = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

Int det_bareiss(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

// Inverse of a nonsingular rational matrix; throws precondition otherwise.
RatMatrix inverse(const RatMatrix& m);
// x with xA = b for nonsingular square A.
std::vector<Rat> solve_left(const RatMatrix& a, const std::vector<Rat>& b);

// Incremental Hermite form of the row span of appended integer vectors.
//
// With a modulus D such that D*Z^n lies in the span, everything runs mod D in
// int64 (Howell-style closure keeps the result exact). Without one, rows are
// kept in GMP integers.
class HnfBuilder {
 public:
  explicit HnfBuilder(std::size_t cols, std::optional<Int> modulus = std::nullopt);

  std::size_t cols() const { return cols_; }
  bool modular() const { return modular_; }
  void add(const std::vector<Int>& v);
  void add(const std::vector<std::int64_t>& v);
  IntMatrix result() const;

 private:
  void add_mod(std::vector<std::int64_t> v, std::size_t start);
  void add_big(std::vector<Int> v);

  std::size_t cols_;
  bool modular_ = false;
  std::int64_t mod_ = 0;
  std::vector<std::vector<std::int64_t>> mrows_;  // by pivot column; empty = D*e_c
  std::vector<std::vector<Int>> brows_;           // by pivot column; empty = none
};

}  // namespace bwc::linalg
