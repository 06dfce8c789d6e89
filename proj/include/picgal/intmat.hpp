#pragma once

#include <optional>
#include <vector>

#include "picgal/common.hpp"

namespace picgal {

/// Dense matrix over arbitrary-precision integers.
class IMat {
 public:
  IMat() = default;
  IMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static IMat identity(int n);
  static IMat diagonal(const std::vector<Int>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool operator==(const IMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  IMat operator*(const IMat& o) const;
  IMat operator+(const IMat& o) const;
  IMat operator-(const IMat& o) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;

  IMat transposed() const;
  IMat pow(unsigned long e) const;
  Int trace() const;
  bool is_identity() const;
  bool is_zero() const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void negate_row(int i);
  void negate_col(int i);
  /// row_i += f * row_j
  void add_row(int i, int j, const Int& f);
  void add_col(int i, int j, const Int& f);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

/// Smith normal form  left * A * right = diag(diagonal), with unimodular
/// transforms and the divisibility chain d_1 | d_2 | ... (entries >= 0).
struct SmithForm {
  int m = 0, n = 0;
  std::vector<Int> diagonal;  // length min(m,n)
  IMat left, right;
  int rank = 0;  // number of nonzero diagonal entries
};

SmithForm smith_form(IMat a);

/// Exact determinant via fraction-free (Bareiss) elimination.
Int det(IMat a);

/// Basis of the integer kernel {x : a x = 0}; the returned basis spans the
/// saturated kernel sublattice (it is a direct summand of Z^n).
std::vector<std::vector<Int>> integer_kernel(const IMat& a);

/// Solve a x = b over the integers using a precomputed Smith form of a.
/// Returns one solution, or nullopt if none exists in the lattice.
std::optional<std::vector<Int>> solve_in_lattice(const SmithForm& s, const std::vector<Int>& b);

/// Inertia (p, n, z) of a symmetric integer matrix, computed by exact
/// rational symmetric elimination.
struct Inertia {
  int positive = 0, negative = 0, zero = 0;
};

Inertia symmetric_inertia(const IMat& s);

}  // namespace picgal
