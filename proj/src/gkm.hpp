#pragma once

#include "spline.hpp"

namespace splinez {

// Dense arbitrary-precision integer matrix, row major.
class IMat {
public:
  IMat() = default;
  IMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static IMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  bool operator==(const IMat&) const = default;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void add_row_multiple(int dst, int src, const Int& q);  // row dst += q * row src
  void add_col_multiple(int dst, int src, const Int& q);
  void negate_row(int i);
  void negate_col(int j);

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> a_;
};

IMat operator*(const IMat& a, const IMat& b);

// Exact determinant (fraction-free Gaussian elimination).
Int determinant(const IMat& m);

// The (n+s) x (2n+s) block matrix [A B 0; I 0 C]: one row per edge with +1 at
// the lower endpoint index and -1 at the higher, B = diag(edge moduli),
// C = diag(vertex multipliers).
IMat build_gkm(const EdgeLabeledGraph& g);

struct Snf {
  IMat s;  // diagonal, d_1 | d_2 | ..., entries nonnegative
  IMat u;  // unimodular, u * input * v == s
  IMat v;
};

// Smith normal form with minimal-absolute-value pivoting.
Snf smith_normal_form(const IMat& m);

// Integer row vectors spanning a sublattice of Z^dim.
struct LatticeBasis {
  int dim = 0;
  std::vector<std::vector<Int>> rows;
};

// Basis of { x : m x = 0 } over Z, from the kernel columns of the SNF.
LatticeBasis integer_kernel(const IMat& m);

// Canonical row-style Hermite normal form of the span: echelon rows with
// positive pivots, entries above each pivot reduced into [0, pivot).
LatticeBasis hermite_normal_form(const LatticeBasis& b);

// Kernel of the GKM matrix projected to the first n coordinates, returned in
// Hermite normal form. Every row is a spline; for graphs with positive labels
// the rows are the canonical flow-up classes.
LatticeBasis spline_lattice(const EdgeLabeledGraph& g);

// Same integer span (equal Hermite normal forms).
bool lattice_equal(const LatticeBasis& a, const LatticeBasis& b);

LatticeBasis basis_lattice(const FlowUpBasis& b);

}  // namespace splinez
