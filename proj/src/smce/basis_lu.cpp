#include "smce/basis_lu.hpp"

#include <algorithm>
#include <cmath>

namespace smce {

namespace {
constexpr double kSingularTol = 1e-11;
constexpr double kDropTol = 1e-13;
constexpr double kEtaPivotTol = 1e-9;
}  // namespace

bool BasisLU::factor(const SparseCols& a, const std::vector<int>& basis) {
  m_ = static_cast<int>(basis.size());
  l_ptr_.assign(1, 0);
  l_row_.clear();
  l_val_.clear();
  u_ptr_.assign(1, 0);
  u_row_.clear();
  u_val_.clear();
  u_diag_.assign(static_cast<size_t>(m_), 0.0);
  row_to_pos_.assign(static_cast<size_t>(a.rows), -1);
  pos_to_row_.assign(static_cast<size_t>(m_), -1);
  eta_start_.clear();
  eta_pos_.clear();
  eta_idx_.clear();
  eta_val_.clear();
  eta_pivot_.clear();

  std::vector<double> work(static_cast<size_t>(a.rows), 0.0);
  std::vector<int> pattern;
  std::vector<int> reach;
  std::vector<char> seen(static_cast<size_t>(m_), 0);
  std::vector<int> stack;

  for (int k = 0; k < m_; ++k) {
    // Scatter column basis[k] of A.
    pattern.clear();
    const int col = basis[static_cast<size_t>(k)];
    for (int e = a.col_ptr[static_cast<size_t>(col)]; e < a.col_ptr[static_cast<size_t>(col) + 1];
         ++e) {
      work[static_cast<size_t>(a.row_idx[static_cast<size_t>(e)])] = a.val[static_cast<size_t>(e)];
      pattern.push_back(a.row_idx[static_cast<size_t>(e)]);
    }

    // Symbolic reach: the set of earlier pivot positions whose L columns can
    // touch this column, found by DFS over the L structure.
    reach.clear();
    for (int r : pattern) {
      int p = row_to_pos_[static_cast<size_t>(r)];
      if (p < 0 || seen[static_cast<size_t>(p)]) continue;
      stack.assign(1, p);
      seen[static_cast<size_t>(p)] = 1;
      while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        reach.push_back(q);
        for (int e = l_ptr_[static_cast<size_t>(q)]; e < l_ptr_[static_cast<size_t>(q) + 1]; ++e) {
          int rr = l_row_[static_cast<size_t>(e)];
          int qq = row_to_pos_[static_cast<size_t>(rr)];
          if (qq >= 0 && !seen[static_cast<size_t>(qq)]) {
            seen[static_cast<size_t>(qq)] = 1;
            stack.push_back(qq);
          }
        }
      }
    }
    std::sort(reach.begin(), reach.end());

    // Numeric elimination in ascending pivot order.
    for (int p : reach) {
      seen[static_cast<size_t>(p)] = 0;
      const int prow = pos_to_row_[static_cast<size_t>(p)];
      const double v = work[static_cast<size_t>(prow)];
      if (v == 0.0) continue;
      for (int e = l_ptr_[static_cast<size_t>(p)]; e < l_ptr_[static_cast<size_t>(p) + 1]; ++e) {
        const int r = l_row_[static_cast<size_t>(e)];
        if (work[static_cast<size_t>(r)] == 0.0 &&
            row_to_pos_[static_cast<size_t>(r)] < 0)
          pattern.push_back(r);  // fill-in below the diagonal
        work[static_cast<size_t>(r)] -= v * l_val_[static_cast<size_t>(e)];
      }
    }

    // Pivot: largest magnitude among rows not yet pivotal.
    int pivot_row = -1;
    double pivot_val = 0.0;
    for (int r : pattern) {
      if (row_to_pos_[static_cast<size_t>(r)] >= 0) continue;
      const double v = std::abs(work[static_cast<size_t>(r)]);
      if (v > std::abs(pivot_val) + 0.0 ||
          (v == std::abs(pivot_val) && pivot_row >= 0 && r < pivot_row)) {
        if (v > std::abs(pivot_val)) {
          pivot_val = work[static_cast<size_t>(r)];
          pivot_row = r;
        } else if (r < pivot_row) {
          pivot_val = work[static_cast<size_t>(r)];
          pivot_row = r;
        }
      }
    }
    if (pivot_row < 0 || std::abs(pivot_val) < kSingularTol) {
      for (int r : pattern) work[static_cast<size_t>(r)] = 0.0;
      for (int p : reach) {
        const int prow = pos_to_row_[static_cast<size_t>(p)];
        work[static_cast<size_t>(prow)] = 0.0;
      }
      return false;
    }

    // Emit U column (entries at already-pivotal rows) and L column.
    for (int p : reach) {
      const int prow = pos_to_row_[static_cast<size_t>(p)];
      const double v = work[static_cast<size_t>(prow)];
      if (std::abs(v) > kDropTol) {
        u_row_.push_back(p);
        u_val_.push_back(v);
      }
      work[static_cast<size_t>(prow)] = 0.0;
    }
    u_ptr_.push_back(static_cast<int>(u_row_.size()));
    u_diag_[static_cast<size_t>(k)] = pivot_val;

    for (int r : pattern) {
      if (row_to_pos_[static_cast<size_t>(r)] >= 0) continue;  // cleared above
      const double v = work[static_cast<size_t>(r)];
      work[static_cast<size_t>(r)] = 0.0;
      if (r == pivot_row || std::abs(v) <= kDropTol) continue;
      l_row_.push_back(r);
      l_val_.push_back(v / pivot_val);
    }
    l_ptr_.push_back(static_cast<int>(l_row_.size()));

    row_to_pos_[static_cast<size_t>(pivot_row)] = k;
    pos_to_row_[static_cast<size_t>(k)] = pivot_row;
  }
  return true;
}

void BasisLU::ftran(std::vector<double>& x) const {
  // Lower solve in original row space, ascending pivot order.
  for (int p = 0; p < m_; ++p) {
    const double v = x[static_cast<size_t>(pos_to_row_[static_cast<size_t>(p)])];
    if (v == 0.0) continue;
    for (int e = l_ptr_[static_cast<size_t>(p)]; e < l_ptr_[static_cast<size_t>(p) + 1]; ++e)
      x[static_cast<size_t>(l_row_[static_cast<size_t>(e)])] -= v * l_val_[static_cast<size_t>(e)];
  }
  // Map to position space and back-substitute through U.
  std::vector<double> y(static_cast<size_t>(m_));
  for (int p = 0; p < m_; ++p) y[static_cast<size_t>(p)] = x[static_cast<size_t>(pos_to_row_[static_cast<size_t>(p)])];
  for (int k = m_ - 1; k >= 0; --k) {
    const double w = y[static_cast<size_t>(k)] / u_diag_[static_cast<size_t>(k)];
    y[static_cast<size_t>(k)] = w;
    if (w == 0.0) continue;
    for (int e = u_ptr_[static_cast<size_t>(k)]; e < u_ptr_[static_cast<size_t>(k) + 1]; ++e)
      y[static_cast<size_t>(u_row_[static_cast<size_t>(e)])] -= w * u_val_[static_cast<size_t>(e)];
  }
  x.swap(y);  // output indexed by basis position

  // Apply the eta file in creation order.
  for (size_t j = 0; j < eta_start_.size(); ++j) {
    const int p = eta_pos_[j];
    const double t = x[static_cast<size_t>(p)];
    if (t == 0.0) continue;
    const int begin = eta_start_[j];
    const int end = (j + 1 < eta_start_.size()) ? eta_start_[j + 1] : static_cast<int>(eta_idx_.size());
    for (int e = begin; e < end; ++e)
      x[static_cast<size_t>(eta_idx_[static_cast<size_t>(e)])] += t * eta_val_[static_cast<size_t>(e)];
    x[static_cast<size_t>(p)] = t * eta_pivot_[j];
  }
}

void BasisLU::btran(std::vector<double>& y) const {
  // Transposed etas in reverse creation order.
  for (size_t j = eta_start_.size(); j-- > 0;) {
    const int p = eta_pos_[j];
    double acc = eta_pivot_[j] * y[static_cast<size_t>(p)];
    const int begin = eta_start_[j];
    const int end = (j + 1 < eta_start_.size()) ? eta_start_[j + 1] : static_cast<int>(eta_idx_.size());
    for (int e = begin; e < end; ++e)
      acc += eta_val_[static_cast<size_t>(e)] * y[static_cast<size_t>(eta_idx_[static_cast<size_t>(e)])];
    y[static_cast<size_t>(p)] = acc;
  }

  // U^T forward solve.
  std::vector<double> a(static_cast<size_t>(m_));
  for (int k = 0; k < m_; ++k) {
    double v = y[static_cast<size_t>(k)];
    for (int e = u_ptr_[static_cast<size_t>(k)]; e < u_ptr_[static_cast<size_t>(k) + 1]; ++e)
      v -= u_val_[static_cast<size_t>(e)] * a[static_cast<size_t>(u_row_[static_cast<size_t>(e)])];
    a[static_cast<size_t>(k)] = v / u_diag_[static_cast<size_t>(k)];
  }

  // L^T backward solve, result scattered to original row space.
  for (int p = m_ - 1; p >= 0; --p) {
    double v = a[static_cast<size_t>(p)];
    for (int e = l_ptr_[static_cast<size_t>(p)]; e < l_ptr_[static_cast<size_t>(p) + 1]; ++e) {
      const int q = row_to_pos_[static_cast<size_t>(l_row_[static_cast<size_t>(e)])];
      v -= l_val_[static_cast<size_t>(e)] * a[static_cast<size_t>(q)];
    }
    a[static_cast<size_t>(p)] = v;
  }
  std::vector<double> out(static_cast<size_t>(m_));
  for (int p = 0; p < m_; ++p) out[static_cast<size_t>(pos_to_row_[static_cast<size_t>(p)])] = a[static_cast<size_t>(p)];
  y.swap(out);
}

bool BasisLU::update(int pos, const std::vector<double>& w) {
  const double pivot = w[static_cast<size_t>(pos)];
  if (std::abs(pivot) < kEtaPivotTol) return false;
  eta_start_.push_back(static_cast<int>(eta_idx_.size()));
  eta_pos_.push_back(pos);
  eta_pivot_.push_back(1.0 / pivot);
  for (int i = 0; i < m_; ++i) {
    if (i == pos) continue;
    const double v = w[static_cast<size_t>(i)];
    if (std::abs(v) <= kDropTol) continue;
    eta_idx_.push_back(i);
    eta_val_.push_back(-v / pivot);
  }
  return true;
}

}  // namespace smce
