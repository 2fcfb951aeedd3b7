#pragma once

// Sparse LU factorization of a simplex basis (left-looking, partial
// pivoting) with product-form eta updates between refactorizations.

#include <vector>

namespace smce {

// Column-major sparse matrix view used to hand basis columns to the
// factorization. Entries of column j live in [col_ptr[j], col_ptr[j+1]).
struct SparseCols {
  std::vector<int> col_ptr;
  std::vector<int> row_idx;
  std::vector<double> val;
  int rows = 0;
  int cols() const { return static_cast<int>(col_ptr.size()) - 1; }
};

class BasisLU {
public:
  // Factors the m x m matrix whose k-th column is columns[basis[k]] of A.
  // Returns false when numerically singular.
  bool factor(const SparseCols& a, const std::vector<int>& basis);

  // Solves B x = b in place (dense vector of length m).
  void ftran(std::vector<double>& x) const;

  // Solves B^T y = c in place.
  void btran(std::vector<double>& y) const;

  // Product-form update after the basic variable at position `pos` is
  // replaced; `w` is ftran(entering column), consumed by the call.
  // Returns false when the pivot element is too small to update safely.
  bool update(int pos, const std::vector<double>& w);

  int eta_count() const { return static_cast<int>(eta_start_.size()); }
  int dimension() const { return m_; }

private:
  int m_ = 0;

  // L and U in elimination (position) space. L is unit lower triangular and
  // stored by pivot step: column k holds the multipliers created at step k.
  // U is stored by column with the diagonal kept separately.
  std::vector<int> l_ptr_, l_row_;
  std::vector<double> l_val_;
  std::vector<int> u_ptr_, u_row_;
  std::vector<double> u_val_;
  std::vector<double> u_diag_;
  std::vector<int> row_to_pos_;  // original row -> pivot position
  std::vector<int> pos_to_row_;

  // Eta file: sparse (index, value) pairs per eta plus the pivot position.
  std::vector<int> eta_start_;
  std::vector<int> eta_pos_;
  std::vector<int> eta_idx_;
  std::vector<double> eta_val_;
  std::vector<double> eta_pivot_;
};

}  // namespace smce
