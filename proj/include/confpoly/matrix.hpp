#ifndef CONFPOLY_MATRIX_HPP
#define CONFPOLY_MATRIX_HPP

#include <vector>

#include "confpoly/polynomial.hpp"
#include "confpoly/rational.hpp"

namespace confpoly {

/// Dense matrix of rationals in row-major storage.
struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> data;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {
    if (r < 0 || c < 0) throw ArgumentError("negative matrix dimension");
  }

  Rational& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }

  static RatMatrix identity(int n);

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }
};

RatMatrix transpose(const RatMatrix& m);
RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);
RatMatrix submatrix(const RatMatrix& m, const std::vector<int>& row_idx,
                    const std::vector<int>& col_idx);

/// Exact determinant via fraction-free Bareiss elimination: row denominators
/// are cleared, the integer elimination divides out the previous pivot at
/// each step, and the collected row scales are divided back out at the end.
Rational det(const RatMatrix& m);

struct RrefResult {
  RatMatrix mat;
  std::vector<int> pivot_cols;
  int rank = 0;
};

/// Reduced row echelon form with deterministic pivoting (first nonzero row
/// in column order).
RrefResult rref(const RatMatrix& m);

int rank(const RatMatrix& m);

/// Basis of the right kernel {x : m x = 0}, one vector per row; 0 x c matrix
/// when the kernel is trivial.  Deterministic: free variables in column order.
RatMatrix kernel(const RatMatrix& m);

/// One solution of m x = b, if any.
std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& b);

/// Z-basis of the saturated integer kernel {x in Z^n : m x = 0}, one vector
/// per row.  Row denominators of m are cleared first (this preserves the
/// kernel), then unimodular column operations bring the matrix to column
/// echelon form; the operation columns over the vanished part form the basis.
/// Every integer kernel vector is an integer combination of the rows returned,
/// which is what keeps restrictions of integral lattice bases integral.
RatMatrix lattice_kernel(const RatMatrix& m);

/// True when every row of `sub` lies in the row span of `space`.
bool row_span_contains(const RatMatrix& space, const RatMatrix& sub);

/// True when the two matrices have identical row spans.
bool same_row_span(const RatMatrix& a, const RatMatrix& b);

/// Determinant of a square matrix of polynomials, expanded row by row with
/// minors cached per column subset.  Intended for the small symbolic forms
/// (dimension up to roughly 10).
Polynomial det_poly(const std::vector<std::vector<Polynomial>>& m);

}  // namespace confpoly

#endif
