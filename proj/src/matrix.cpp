#include "rosi/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace rosi {

IMatrix IMatrix::identity(std::size_t n) {
  IMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IMatrix::is_identity() const {
  if (rows != cols) return false;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IMatrix::is_zero() const {
  for (const auto& v : a)
    if (v != 0) return false;
  return true;
}

IMatrix mat_mul(const IMatrix& x, const IMatrix& y) {
  assert(x.cols == y.rows);
  IMatrix r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Int& v = x.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        if (y.at(k, j) != 0) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

IMatrix hstack(const IMatrix& x, const IMatrix& y) {
  assert(x.rows == y.rows);
  IMatrix r(x.rows, x.cols + y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (std::size_t j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
  }
  return r;
}

SmithForm smith_normal_form(IMatrix a, bool needU, bool needV) {
  std::size_t rows = a.rows, cols = a.cols;
  SmithForm f;
  if (needU) f.U = IMatrix::identity(rows);
  if (needV) f.V = IMatrix::identity(cols);

  auto swapRows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    if (needU)
      for (std::size_t c = 0; c < rows; ++c) std::swap(f.U.at(i, c), f.U.at(j, c));
  };
  auto swapCols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    if (needV)
      for (std::size_t r = 0; r < cols; ++r) std::swap(f.V.at(r, i), f.V.at(r, j));
  };
  auto addRow = [&](std::size_t dst, std::size_t src, const Int& q) {
    // row dst += q * row src
    for (std::size_t c = 0; c < cols; ++c) a.at(dst, c) += q * a.at(src, c);
    if (needU)
      for (std::size_t c = 0; c < rows; ++c) f.U.at(dst, c) += q * f.U.at(src, c);
  };
  auto addCol = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t r = 0; r < rows; ++r) a.at(r, dst) += q * a.at(r, src);
    if (needV)
      for (std::size_t r = 0; r < cols; ++r) f.V.at(r, dst) += q * f.V.at(r, src);
  };
  auto negateRow = [&](std::size_t i) {
    for (std::size_t c = 0; c < cols; ++c) a.at(i, c) = -a.at(i, c);
    if (needU)
      for (std::size_t c = 0; c < rows; ++c) f.U.at(i, c) = -f.U.at(i, c);
  };

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // find a nonzero pivot of minimal absolute value
    std::size_t pr = t, pc = t;
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a.at(i, j) == 0) continue;
        Int v = abs(a.at(i, j));
        if (!found || v < best) {
          best = v;
          pr = i;
          pc = j;
          found = true;
        }
      }
    if (!found) break;
    swapRows(t, pr);
    swapCols(t, pc);
    if (a.at(t, t) < 0) negateRow(t);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (a.at(i, t) == 0) continue;
      Int q = a.at(i, t) / a.at(t, t);
      if (q != 0) addRow(i, t, -q);
      if (a.at(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (a.at(t, j) == 0) continue;
      Int q = a.at(t, j) / a.at(t, t);
      if (q != 0) addCol(j, t, -q);
      if (a.at(t, j) != 0) clean = false;
    }
    if (!clean) continue; // smaller remainders exist; repick pivot

    // ensure the pivot divides the rest of the block
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a.at(i, j) % a.at(t, t) != 0) {
          addRow(t, i, 1);
          divides = false;
          break;
        }
    if (!divides) continue;
    ++t;
  }

  for (std::size_t i = 0; i < t; ++i) f.diag.push_back(a.at(i, i));
  return f;
}

std::size_t rank_of(const IMatrix& a) {
  return smith_normal_form(a, false, false).rank();
}

IMatrix kernel_basis(const IMatrix& a) {
  SmithForm f = smith_normal_form(a, false, true);
  std::size_t r = f.rank();
  IMatrix k(a.cols, a.cols - r);
  for (std::size_t j = r; j < a.cols; ++j)
    for (std::size_t i = 0; i < a.cols; ++i) k.at(i, j - r) = f.V.at(i, j);
  return k;
}

std::optional<std::vector<Int>> solve(const IMatrix& a, const std::vector<Int>& b) {
  SmithForm f = smith_normal_form(a, true, true);
  std::size_t r = f.rank();
  // A x = b  <=>  D (V^-1 x) = U b
  std::vector<Int> ub(a.rows, 0);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.rows; ++j)
      if (f.U.at(i, j) != 0) ub[i] += f.U.at(i, j) * b[j];
  std::vector<Int> y(a.cols, 0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    if (i < r) {
      if (ub[i] % f.diag[i] != 0) return std::nullopt;
      y[i] = ub[i] / f.diag[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Int> x(a.cols, 0);
  for (std::size_t i = 0; i < a.cols; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      if (f.V.at(i, j) != 0 && y[j] != 0) x[i] += f.V.at(i, j) * y[j];
  return x;
}

std::optional<IMatrix> solve_matrix(const IMatrix& a, const IMatrix& b) {
  SmithForm f = smith_normal_form(a, true, true);
  std::size_t r = f.rank();
  IMatrix x(a.cols, b.cols);
  for (std::size_t c = 0; c < b.cols; ++c) {
    std::vector<Int> ub(a.rows, 0);
    for (std::size_t i = 0; i < a.rows; ++i)
      for (std::size_t j = 0; j < a.rows; ++j)
        if (f.U.at(i, j) != 0) ub[i] += f.U.at(i, j) * b.at(j, c);
    std::vector<Int> y(a.cols, 0);
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i < r) {
        if (ub[i] % f.diag[i] != 0) return std::nullopt;
        y[i] = ub[i] / f.diag[i];
      } else if (ub[i] != 0) {
        return std::nullopt;
      }
    }
    for (std::size_t i = 0; i < a.cols; ++i) {
      Int v = 0;
      for (std::size_t j = 0; j < a.cols; ++j)
        if (f.V.at(i, j) != 0 && y[j] != 0) v += f.V.at(i, j) * y[j];
      x.at(i, c) = v;
    }
  }
  return x;
}

LatticeSolver make_lattice_solver(IMatrix m) {
  LatticeSolver s;
  s.snf = smith_normal_form(m, true, false);
  s.m = std::move(m);
  return s;
}

bool LatticeSolver::contains(const std::vector<Int>& y) const {
  std::size_t r = snf.rank();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Int v = 0;
    for (std::size_t j = 0; j < m.rows; ++j)
      if (snf.U.at(i, j) != 0) v += snf.U.at(i, j) * y[j];
    if (i < r) {
      if (v % snf.diag[i] != 0) return false;
    } else if (v != 0) {
      return false;
    }
  }
  return true;
}

IMatrix column_lattice_basis(const IMatrix& m) {
  // im(M) = U^-1 im(D): basis vectors are diag[i] * (U^-1 e_i).
  SmithForm f = smith_normal_form(m, true, false);
  std::size_t r = f.rank();
  // invert U by solving U X = I via SNF again (U unimodular, small)
  IMatrix uinv = *solve_matrix(f.U, IMatrix::identity(m.rows));
  IMatrix b(m.rows, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < m.rows; ++i) b.at(i, j) = uinv.at(i, j) * f.diag[j];
  return b;
}

IMatrix lattice_intersection(const IMatrix& x, const IMatrix& y) {
  if (x.cols == 0 || y.cols == 0) return IMatrix(x.rows, 0);
  IMatrix neg = y;
  for (auto& v : neg.a) v = -v;
  IMatrix stacked = hstack(x, neg);
  IMatrix k = kernel_basis(stacked);
  // intersection generators: x * (first block of each kernel column)
  IMatrix gens(x.rows, k.cols);
  for (std::size_t c = 0; c < k.cols; ++c)
    for (std::size_t i = 0; i < x.rows; ++i) {
      Int v = 0;
      for (std::size_t j = 0; j < x.cols; ++j)
        if (x.at(i, j) != 0 && k.at(j, c) != 0) v += x.at(i, j) * k.at(j, c);
      gens.at(i, c) = v;
    }
  return column_lattice_basis(gens);
}

bool same_column_lattice(const IMatrix& x, const IMatrix& y) {
  LatticeSolver sx = make_lattice_solver(x);
  LatticeSolver sy = make_lattice_solver(y);
  std::vector<Int> col(x.rows);
  for (std::size_t c = 0; c < y.cols; ++c) {
    for (std::size_t i = 0; i < x.rows; ++i) col[i] = y.at(i, c);
    if (!sx.contains(col)) return false;
  }
  for (std::size_t c = 0; c < x.cols; ++c) {
    for (std::size_t i = 0; i < x.rows; ++i) col[i] = x.at(i, c);
    if (!sy.contains(col)) return false;
  }
  return true;
}

} // namespace rosi
