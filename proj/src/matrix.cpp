#include "confpoly/matrix.hpp"

#include <boost/multiprecision/integer.hpp>
#include <map>

namespace confpoly {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix transpose(const RatMatrix& m) {
  RatMatrix t(m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  }
  return t;
}

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols != b.rows) throw ArgumentError("matrix product dimension mismatch");
  RatMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols; ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

RatMatrix submatrix(const RatMatrix& m, const std::vector<int>& row_idx,
                    const std::vector<int>& col_idx) {
  RatMatrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
  for (std::size_t r = 0; r < row_idx.size(); ++r) {
    for (std::size_t c = 0; c < col_idx.size(); ++c) {
      out.at(static_cast<int>(r), static_cast<int>(c)) = m.at(row_idx[r], col_idx[c]);
    }
  }
  return out;
}

Rational det(const RatMatrix& m) {
  if (m.rows != m.cols) throw ArgumentError("determinant of non-square matrix");
  const int n = m.rows;
  if (n == 0) return 1;

  // Clear row denominators so the elimination runs over the integers.
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  BigInt scale = 1;
  for (int i = 0; i < n; ++i) {
    BigInt l = 1;
    for (int j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, m.at(i, j).den());
    for (int j = 0; j < n; ++j) {
      const Rational& x = m.at(i, j);
      a[i][j] = x.num() * (l / x.den());
    }
    scale *= l;
  }

  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r) {
      if (a[r][k] != 0) {
        piv = r;
        break;
      }
    }
    if (piv == -1) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;  // exact division
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return Rational(sign * a[n - 1][n - 1], scale);
}

RrefResult rref(const RatMatrix& m) {
  RrefResult res;
  res.mat = m;
  RatMatrix& a = res.mat;
  int row = 0;
  for (int col = 0; col < a.cols && row < a.rows; ++col) {
    int piv = -1;
    for (int r = row; r < a.rows; ++r) {
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv == -1) continue;
    if (piv != row) {
      for (int c = 0; c < a.cols; ++c) std::swap(a.at(piv, c), a.at(row, c));
    }
    Rational inv = Rational(1) / a.at(row, col);
    for (int c = col; c < a.cols; ++c) a.at(row, c) *= inv;
    for (int r = 0; r < a.rows; ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      Rational f = a.at(r, col);
      for (int c = col; c < a.cols; ++c) a.at(r, c) -= f * a.at(row, c);
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

int rank(const RatMatrix& m) { return rref(m).rank; }

RatMatrix kernel(const RatMatrix& m) {
  RrefResult r = rref(m);
  std::vector<int> free_cols;
  {
    std::size_t p = 0;
    for (int c = 0; c < m.cols; ++c) {
      if (p < r.pivot_cols.size() && r.pivot_cols[p] == c) {
        ++p;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  RatMatrix out(static_cast<int>(free_cols.size()), m.cols);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    int f = free_cols[i];
    out.at(static_cast<int>(i), f) = 1;
    for (int p = 0; p < r.rank; ++p) {
      out.at(static_cast<int>(i), r.pivot_cols[p]) = -r.mat.at(p, f);
    }
  }
  return out;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != m.rows) throw ArgumentError("solve rhs length mismatch");
  RatMatrix aug(m.rows, m.cols + 1);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = b[r];
  }
  RrefResult rr = rref(aug);
  for (int c : rr.pivot_cols) {
    if (c == m.cols) return std::nullopt;  // inconsistent system
  }
  std::vector<Rational> x(m.cols);
  for (int p = 0; p < rr.rank; ++p) x[rr.pivot_cols[p]] = rr.mat.at(p, m.cols);
  return x;
}

RatMatrix lattice_kernel(const RatMatrix& m) {
  const int rows = m.rows, n = m.cols;
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(n));
  for (int i = 0; i < rows; ++i) {
    BigInt l = 1;
    for (int j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, m.at(i, j).den());
    for (int j = 0; j < n; ++j) {
      const Rational& x = m.at(i, j);
      a[i][j] = x.num() * (l / x.den());  // scaling each equation keeps the kernel
    }
  }
  std::vector<std::vector<BigInt>> u(n, std::vector<BigInt>(n));
  for (int j = 0; j < n; ++j) u[j][j] = 1;

  auto col_axpy = [&](int dst, int src, const BigInt& q) {
    for (int i = 0; i < rows; ++i) a[i][dst] -= q * a[i][src];
    for (int i = 0; i < n; ++i) u[i][dst] -= q * u[i][src];
  };
  auto col_swap = [&](int x, int y) {
    if (x == y) return;
    for (int i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
    for (int i = 0; i < n; ++i) std::swap(u[i][x], u[i][y]);
  };

  int r = 0;  // number of pivot columns fixed so far
  for (int i = 0; i < rows && r < n; ++i) {
    for (;;) {
      int piv = -1;
      for (int j = r; j < n; ++j) {
        if (a[i][j] != 0 &&
            (piv == -1 || boost::multiprecision::abs(a[i][j]) <
                              boost::multiprecision::abs(a[i][piv]))) {
          piv = j;
        }
      }
      if (piv == -1) break;
      bool leftover = false;
      for (int j = r; j < n; ++j) {
        if (j == piv || a[i][j] == 0) continue;
        BigInt q = a[i][j] / a[i][piv];  // truncated, so remainders shrink
        if (q != 0) col_axpy(j, piv, q);
        if (a[i][j] != 0) leftover = true;
      }
      if (!leftover) {
        col_swap(piv, r);
        ++r;
        break;
      }
    }
  }

  RatMatrix out(n - r, n);
  for (int k = r; k < n; ++k) {
    int row_out = k - r;
    int lead = -1;
    for (int i = 0; i < n; ++i) {
      if (lead == -1 && u[i][k] != 0) lead = i;
    }
    bool flip = lead >= 0 && u[lead][k] < 0;
    for (int i = 0; i < n; ++i) {
      out.at(row_out, i) = Rational(flip ? BigInt(-u[i][k]) : u[i][k]);
    }
  }
  return out;
}

bool row_span_contains(const RatMatrix& space, const RatMatrix& sub) {
  if (space.cols != sub.cols) throw ArgumentError("row span comparison dimension mismatch");
  RatMatrix stacked(space.rows + sub.rows, space.cols);
  for (int r = 0; r < space.rows; ++r) {
    for (int c = 0; c < space.cols; ++c) stacked.at(r, c) = space.at(r, c);
  }
  for (int r = 0; r < sub.rows; ++r) {
    for (int c = 0; c < sub.cols; ++c) stacked.at(space.rows + r, c) = sub.at(r, c);
  }
  return rank(stacked) == rank(space);
}

bool same_row_span(const RatMatrix& a, const RatMatrix& b) {
  return row_span_contains(a, b) && row_span_contains(b, a);
}

Polynomial det_poly(const std::vector<std::vector<Polynomial>>& m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) throw ArgumentError("determinant of non-square matrix");
  }
  if (n == 0) return Polynomial::constant(0, 1);
  const int nvars = m[0][0].nvars();
  if (n > 62) throw CapacityError("symbolic determinant dimension too large");

  // minors[S] = det of rows 0..|S|-1 on column set S; levels built bottom-up.
  std::map<std::uint64_t, Polynomial> prev;
  prev.emplace(0, Polynomial::constant(nvars, 1));
  for (int r = 1; r <= n; ++r) {
    std::map<std::uint64_t, Polynomial> cur;
    for (EdgeSubset s : all_combinations(n, r)) {
      Polynomial acc(nvars);
      int pos = 0;
      for (int j : s.indices()) {
        const Polynomial& entry = m[r - 1][j];
        if (!entry.is_zero()) {
          EdgeSubset rest = s;
          rest.remove(j);
          const Polynomial& minor = prev.at(rest.bits);
          Polynomial contrib = entry * minor;
          if ((r - 1 + pos) % 2 == 1) contrib = -contrib;
          acc += contrib;
        }
        ++pos;
      }
      cur.emplace(s.bits, std::move(acc));
    }
    prev = std::move(cur);
  }
  return prev.at(EdgeSubset::full(n).bits);
}

}  // namespace confpoly
