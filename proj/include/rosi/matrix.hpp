#ifndef ROSI_MATRIX_HPP
#define ROSI_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace rosi {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major.
struct IMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;

  IMatrix() = default;
  IMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static IMatrix identity(std::size_t n);
  bool is_identity() const;
  bool is_zero() const;
};

IMatrix mat_mul(const IMatrix& x, const IMatrix& y);
IMatrix hstack(const IMatrix& x, const IMatrix& y);

// Smith normal form: U * A * V = D with U, V unimodular and D diagonal with
// divisibility d1 | d2 | ... ; diag holds the nonzero invariants (positive).
struct SmithForm {
  IMatrix U, V;
  std::vector<Int> diag;
  std::size_t rank() const { return diag.size(); }
};
SmithForm smith_normal_form(IMatrix a, bool needU = true, bool needV = true);

std::size_t rank_of(const IMatrix& a);

// Basis of the integer kernel lattice {x : A x = 0}; columns of the result.
IMatrix kernel_basis(const IMatrix& a);

// One integral solution of A x = b, if any.
std::optional<std::vector<Int>> solve(const IMatrix& a, const std::vector<Int>& b);
// Solve A X = B columnwise; nullopt if any column fails.
std::optional<IMatrix> solve_matrix(const IMatrix& a, const IMatrix& b);

// Tools for solvability modulo a column lattice.
struct LatticeSolver {
  IMatrix m;        // generators as columns
  SmithForm snf;    // of m
  bool contains(const std::vector<Int>& y) const; // y in the column lattice?
};
LatticeSolver make_lattice_solver(IMatrix m);

// Basis (as columns) of the lattice spanned by the columns of m.
IMatrix column_lattice_basis(const IMatrix& m);

// Basis of the intersection of two column lattices inside Z^rows.
IMatrix lattice_intersection(const IMatrix& x, const IMatrix& y);

bool same_column_lattice(const IMatrix& x, const IMatrix& y);

} // namespace rosi

#endif
