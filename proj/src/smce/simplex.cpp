#include <algorithm>
#include <cmath>
#include <ostream>
#include <queue>
#include <tuple>

#include "smce/basis_lu.hpp"
#include "smce/errors.hpp"
#include "smce/solver.hpp"

namespace smce {

namespace {

constexpr double kDegenStep = 1e-12;
constexpr double kDualClean = 1e-9;

enum class VState : std::uint8_t { Basic, AtLower, AtUpper, FreeNb };

// Bounded-variable primal simplex over the augmented system A x - s = 0,
// where s carries the row activity bounds. Variables [0, ncols) are the
// structural columns, [ncols, ncols+m) the logicals.
class Simplex {
public:
  Simplex(const MarketProgram& prog, const SimplexOptions& opt) : opt_(opt) {
    m_ = prog.num_rows();
    ncols_ = prog.num_vars();
    ntot_ = ncols_ + m_;

    // Column-wise copy of the row-major program entries.
    std::vector<int> count(static_cast<size_t>(ncols_), 0);
    for (int c : prog.entry_col) ++count[static_cast<size_t>(c)];
    cols_.rows = m_;
    cols_.col_ptr.assign(static_cast<size_t>(ntot_) + 1, 0);
    for (int j = 0; j < ncols_; ++j)
      cols_.col_ptr[static_cast<size_t>(j) + 1] =
          cols_.col_ptr[static_cast<size_t>(j)] + count[static_cast<size_t>(j)];
    for (int j = ncols_; j < ntot_; ++j)
      cols_.col_ptr[static_cast<size_t>(j) + 1] = cols_.col_ptr[static_cast<size_t>(j)] + 1;
    cols_.row_idx.resize(static_cast<size_t>(cols_.col_ptr.back()));
    cols_.val.resize(static_cast<size_t>(cols_.col_ptr.back()));
    std::vector<int> fill(cols_.col_ptr.begin(), cols_.col_ptr.end() - 1);
    for (int r = 0; r < m_; ++r) {
      const Row& row = prog.rows[static_cast<size_t>(r)];
      for (int e = row.begin; e < row.end; ++e) {
        const int j = prog.entry_col[static_cast<size_t>(e)];
        const int at = fill[static_cast<size_t>(j)]++;
        cols_.row_idx[static_cast<size_t>(at)] = r;
        cols_.val[static_cast<size_t>(at)] = prog.entry_val[static_cast<size_t>(e)];
      }
    }
    for (int r = 0; r < m_; ++r) {
      const int j = ncols_ + r;
      const int at = fill[static_cast<size_t>(j)]++;
      cols_.row_idx[static_cast<size_t>(at)] = r;
      cols_.val[static_cast<size_t>(at)] = -1.0;
    }

    lo_.resize(static_cast<size_t>(ntot_));
    hi_.resize(static_cast<size_t>(ntot_));
    base_lo_.resize(static_cast<size_t>(ntot_));
    base_hi_.resize(static_cast<size_t>(ntot_));
    cost_.assign(static_cast<size_t>(ntot_), 0.0);
    for (int j = 0; j < ncols_; ++j) {
      const Variable& v = prog.vars[static_cast<size_t>(j)];
      base_lo_[static_cast<size_t>(j)] = v.lo;
      base_hi_[static_cast<size_t>(j)] = v.hi;
      cost_[static_cast<size_t>(j)] = v.obj;
    }
    for (int r = 0; r < m_; ++r) {
      base_lo_[static_cast<size_t>(ncols_ + r)] = prog.rows[static_cast<size_t>(r)].lo;
      base_hi_[static_cast<size_t>(ncols_ + r)] = prog.rows[static_cast<size_t>(r)].hi;
    }
    for (int j = 0; j < ncols_; ++j)
      if (prog.vars[static_cast<size_t>(j)].is_binary) binary_cols_.push_back(j);
  }

  const std::vector<int>& binaries() const { return binary_cols_; }

  // fix: per binary ordinal, -1 leaves the relaxation, 0/1 pins the value.
  LpSolution solve(const std::vector<int>& fix) {
    lo_ = base_lo_;
    hi_ = base_hi_;
    for (size_t b = 0; b < binary_cols_.size(); ++b) {
      if (b < fix.size() && fix[b] >= 0) {
        lo_[static_cast<size_t>(binary_cols_[b])] = static_cast<double>(fix[b]);
        hi_[static_cast<size_t>(binary_cols_[b])] = static_cast<double>(fix[b]);
      }
    }
    return run();
  }

private:
  SimplexOptions opt_;
  int m_ = 0, ncols_ = 0, ntot_ = 0;
  SparseCols cols_;
  std::vector<double> base_lo_, base_hi_, lo_, hi_, cost_;
  std::vector<int> binary_cols_;

  std::vector<int> basis_;          // position -> variable
  std::vector<int> pos_of_;         // variable -> position or -1
  std::vector<VState> state_;
  std::vector<double> value_;
  BasisLU lu_;
  int iters_ = 0;
  int pivots_since_factor_ = 0;
  int stall_ = 0;
  bool bland_ = false;

  std::vector<double> work_y_, work_w_, work_c_;

  double col_dot(int j, const std::vector<double>& y) const {
    double acc = 0.0;
    for (int e = cols_.col_ptr[static_cast<size_t>(j)]; e < cols_.col_ptr[static_cast<size_t>(j) + 1]; ++e)
      acc += cols_.val[static_cast<size_t>(e)] * y[static_cast<size_t>(cols_.row_idx[static_cast<size_t>(e)])];
    return acc;
  }

  bool refactor() {
    if (!lu_.factor(cols_, basis_)) return false;
    pivots_since_factor_ = 0;
    recompute_basic_values();
    return true;
  }

  void recompute_basic_values() {
    std::vector<double> rhs(static_cast<size_t>(m_), 0.0);
    for (int j = 0; j < ntot_; ++j) {
      if (state_[static_cast<size_t>(j)] == VState::Basic) continue;
      const double v = value_[static_cast<size_t>(j)];
      if (v == 0.0) continue;
      for (int e = cols_.col_ptr[static_cast<size_t>(j)]; e < cols_.col_ptr[static_cast<size_t>(j) + 1]; ++e)
        rhs[static_cast<size_t>(cols_.row_idx[static_cast<size_t>(e)])] -=
            cols_.val[static_cast<size_t>(e)] * v;
    }
    lu_.ftran(rhs);
    for (int p = 0; p < m_; ++p) value_[static_cast<size_t>(basis_[static_cast<size_t>(p)])] = rhs[static_cast<size_t>(p)];
  }

  double infeasibility() const {
    double sum = 0.0;
    for (int p = 0; p < m_; ++p) {
      const int j = basis_[static_cast<size_t>(p)];
      const double v = value_[static_cast<size_t>(j)];
      if (v < lo_[static_cast<size_t>(j)]) sum += lo_[static_cast<size_t>(j)] - v;
      if (v > hi_[static_cast<size_t>(j)]) sum += v - hi_[static_cast<size_t>(j)];
    }
    return sum;
  }

  LpSolution run() {
    basis_.resize(static_cast<size_t>(m_));
    pos_of_.assign(static_cast<size_t>(ntot_), -1);
    state_.assign(static_cast<size_t>(ntot_), VState::AtLower);
    value_.assign(static_cast<size_t>(ntot_), 0.0);

    for (int j = 0; j < ncols_; ++j) {
      const double lo = lo_[static_cast<size_t>(j)], hi = hi_[static_cast<size_t>(j)];
      if (std::isfinite(lo)) {
        state_[static_cast<size_t>(j)] = VState::AtLower;
        value_[static_cast<size_t>(j)] = lo;
      } else if (std::isfinite(hi)) {
        state_[static_cast<size_t>(j)] = VState::AtUpper;
        value_[static_cast<size_t>(j)] = hi;
      } else {
        state_[static_cast<size_t>(j)] = VState::FreeNb;
        value_[static_cast<size_t>(j)] = 0.0;
      }
    }
    for (int r = 0; r < m_; ++r) {
      const int j = ncols_ + r;
      basis_[static_cast<size_t>(r)] = j;
      pos_of_[static_cast<size_t>(j)] = r;
      state_[static_cast<size_t>(j)] = VState::Basic;
    }
    if (!refactor()) return finish(LpStatus::Numerical);

    LpStatus st = iterate(true);
    if (st != LpStatus::Optimal) return finish(st);
    if (infeasibility() > opt_.tol_feas * 10.0) return finish(LpStatus::Infeasible);
    st = iterate(false);
    return finish(st);
  }

  // Shared phase-1 / phase-2 loop. Phase 1 minimizes total bound violation of
  // the basics; phase 2 minimizes the true cost over the feasible region.
  LpStatus iterate(bool phase1) {
    work_y_.assign(static_cast<size_t>(m_), 0.0);
    while (true) {
      if (iters_ >= opt_.max_iterations) return LpStatus::IterationLimit;
      ++iters_;
      if (pivots_since_factor_ >= opt_.refactor_interval) {
        if (!refactor()) return LpStatus::Numerical;
      }

      if (phase1 && infeasibility() <= opt_.tol_feas) return LpStatus::Optimal;

      // Row duals for the phase cost.
      work_c_.assign(static_cast<size_t>(m_), 0.0);
      bool any_infeasible = false;
      for (int p = 0; p < m_; ++p) {
        const int j = basis_[static_cast<size_t>(p)];
        if (phase1) {
          const double v = value_[static_cast<size_t>(j)];
          if (v < lo_[static_cast<size_t>(j)] - opt_.tol_feas) {
            work_c_[static_cast<size_t>(p)] = -1.0;
            any_infeasible = true;
          } else if (v > hi_[static_cast<size_t>(j)] + opt_.tol_feas) {
            work_c_[static_cast<size_t>(p)] = 1.0;
            any_infeasible = true;
          }
        } else {
          work_c_[static_cast<size_t>(p)] = cost_[static_cast<size_t>(j)];
        }
      }
      if (phase1 && !any_infeasible) return LpStatus::Optimal;
      work_y_ = work_c_;
      lu_.btran(work_y_);

      // Entering variable: Dantzig by default, Bland after a stall.
      int q = -1;
      double best = 0.0;
      int sigma = +1;
      for (int j = 0; j < ntot_; ++j) {
        const VState st = state_[static_cast<size_t>(j)];
        if (st == VState::Basic) continue;
        if (hi_[static_cast<size_t>(j)] - lo_[static_cast<size_t>(j)] <= 0.0) continue;  // fixed
        const double cj = phase1 ? 0.0 : cost_[static_cast<size_t>(j)];
        const double d = cj - col_dot(j, work_y_);
        int dir = 0;
        double score = 0.0;
        if (st == VState::AtLower && d < -opt_.tol_dual) {
          dir = +1;
          score = -d;
        } else if (st == VState::AtUpper && d > opt_.tol_dual) {
          dir = -1;
          score = d;
        } else if (st == VState::FreeNb && std::abs(d) > opt_.tol_dual) {
          dir = d < 0 ? +1 : -1;
          score = std::abs(d);
        }
        if (dir == 0) continue;
        if (bland_) {
          q = j;
          sigma = dir;
          break;
        }
        if (score > best + 1e-12 || (score > best - 1e-12 && q >= 0 && j < q)) {
          if (score > best) best = score;
          q = j;
          sigma = dir;
        }
      }
      if (q < 0) return LpStatus::Optimal;  // phase optimum

      // Direction through the basis.
      work_w_.assign(static_cast<size_t>(m_), 0.0);
      for (int e = cols_.col_ptr[static_cast<size_t>(q)]; e < cols_.col_ptr[static_cast<size_t>(q) + 1]; ++e)
        work_w_[static_cast<size_t>(cols_.row_idx[static_cast<size_t>(e)])] =
            cols_.val[static_cast<size_t>(e)];
      lu_.ftran(work_w_);

      // Ratio test. Basic value change per unit step: -sigma * w[p].
      double limit = hi_[static_cast<size_t>(q)] - lo_[static_cast<size_t>(q)];  // bound flip
      int blocker = -1;   // basis position
      double block_abs_w = 0.0;
      int to_upper = 0;   // bound the blocker leaves at
      for (int p = 0; p < m_; ++p) {
        const double w = work_w_[static_cast<size_t>(p)];
        if (std::abs(w) <= opt_.ratio_eps) continue;
        const int j = basis_[static_cast<size_t>(p)];
        const double v = value_[static_cast<size_t>(j)];
        const double rate = -sigma * w;  // dv/dstep
        const double vlo = lo_[static_cast<size_t>(j)], vhi = hi_[static_cast<size_t>(j)];
        double ratio = -1.0;
        int hits_upper = 0;
        if (phase1 && v < vlo - opt_.tol_feas) {
          if (rate > 0.0) {  // infeasible-below basic rising to its lower bound
            ratio = (vlo - v) / rate;
            hits_upper = 0;
          }
        } else if (phase1 && v > vhi + opt_.tol_feas) {
          if (rate < 0.0) {
            ratio = (v - vhi) / (-rate);
            hits_upper = 1;
          }
        } else if (rate < 0.0 && std::isfinite(vlo)) {
          ratio = (v - vlo) / (-rate);
          hits_upper = 0;
        } else if (rate > 0.0 && std::isfinite(vhi)) {
          ratio = (vhi - v) / rate;
          hits_upper = 1;
        }
        if (ratio < 0.0) continue;
        ratio = std::max(ratio, 0.0);
        const bool better =
            ratio < limit - 1e-12 ||
            (ratio < limit + 1e-12 &&
             (blocker < 0 || std::abs(w) > block_abs_w + 1e-12 ||
              (std::abs(w) > block_abs_w - 1e-12 && j < basis_[static_cast<size_t>(blocker)])));
        if (better) {
          limit = std::min(limit, std::max(ratio, 0.0));
          blocker = p;
          block_abs_w = std::abs(w);
          to_upper = hits_upper;
        }
      }

      if (!std::isfinite(limit)) {
        // No blocking event and an open-ended entering span.
        return phase1 ? LpStatus::Numerical : LpStatus::Unbounded;
      }

      const double step = std::max(limit, 0.0);
      stall_ = (step <= kDegenStep) ? stall_ + 1 : 0;
      if (stall_ >= opt_.stall_limit) bland_ = true;
      if (stall_ == 0) bland_ = false;

      // Move the entering variable and update the basics.
      value_[static_cast<size_t>(q)] += sigma * step;
      if (step > 0.0) {
        for (int p = 0; p < m_; ++p) {
          const double w = work_w_[static_cast<size_t>(p)];
          if (w == 0.0) continue;
          value_[static_cast<size_t>(basis_[static_cast<size_t>(p)])] -= sigma * step * w;
        }
      }

      if (blocker < 0) {
        // Bound flip: the entering variable traversed its own range.
        state_[static_cast<size_t>(q)] =
            (sigma > 0) ? VState::AtUpper : VState::AtLower;
        value_[static_cast<size_t>(q)] =
            (sigma > 0) ? hi_[static_cast<size_t>(q)] : lo_[static_cast<size_t>(q)];
        continue;
      }

      const int leaving = basis_[static_cast<size_t>(blocker)];
      value_[static_cast<size_t>(leaving)] =
          to_upper ? hi_[static_cast<size_t>(leaving)] : lo_[static_cast<size_t>(leaving)];
      state_[static_cast<size_t>(leaving)] = to_upper ? VState::AtUpper : VState::AtLower;
      pos_of_[static_cast<size_t>(leaving)] = -1;
      basis_[static_cast<size_t>(blocker)] = q;
      pos_of_[static_cast<size_t>(q)] = blocker;
      state_[static_cast<size_t>(q)] = VState::Basic;

      if (!lu_.update(blocker, work_w_)) {
        if (!refactor()) return LpStatus::Numerical;
      } else if (++pivots_since_factor_ >= opt_.refactor_interval) {
        if (!refactor()) return LpStatus::Numerical;
      }

      if (opt_.trace && iters_ % 100 == 0) {
        *opt_.trace << (phase1 ? "phase1" : "phase2") << " iter " << iters_
                    << (phase1 ? " infeas " : " obj ")
                    << (phase1 ? infeasibility() : objective_value()) << '\n';
      }
    }
  }

  double objective_value() const {
    double acc = 0.0;
    for (int j = 0; j < ncols_; ++j)
      acc += cost_[static_cast<size_t>(j)] * value_[static_cast<size_t>(j)];
    return acc;
  }

  LpSolution finish(LpStatus status) {
    LpSolution sol;
    sol.status = status;
    sol.iterations = iters_;
    sol.x.assign(value_.begin(), value_.begin() + ncols_);
    sol.objective = objective_value();
    if (status != LpStatus::Optimal) return sol;

    // Final duals and reduced costs from the phase-2 cost vector.
    work_c_.assign(static_cast<size_t>(m_), 0.0);
    for (int p = 0; p < m_; ++p)
      work_c_[static_cast<size_t>(p)] = cost_[static_cast<size_t>(basis_[static_cast<size_t>(p)])];
    work_y_ = work_c_;
    lu_.btran(work_y_);
    sol.row_dual.assign(static_cast<size_t>(m_), 0.0);
    for (int r = 0; r < m_; ++r) {
      double y = work_y_[static_cast<size_t>(r)];
      if (std::abs(y) < kDualClean) y = 0.0;
      sol.row_dual[static_cast<size_t>(r)] = y;
    }
    sol.reduced_cost.assign(static_cast<size_t>(ncols_), 0.0);
    for (int j = 0; j < ncols_; ++j) {
      double d = cost_[static_cast<size_t>(j)] - col_dot(j, work_y_);
      if (std::abs(d) < kDualClean) d = 0.0;
      sol.reduced_cost[static_cast<size_t>(j)] = d;
    }

    // Certificates: primal feasibility, dual feasibility, complementary
    // slackness and the bound-based dual objective.
    std::vector<double> activity(static_cast<size_t>(m_), 0.0);
    for (int j = 0; j < ncols_; ++j) {
      const double v = value_[static_cast<size_t>(j)];
      if (v == 0.0) continue;
      for (int e = cols_.col_ptr[static_cast<size_t>(j)]; e < cols_.col_ptr[static_cast<size_t>(j) + 1]; ++e)
        activity[static_cast<size_t>(cols_.row_idx[static_cast<size_t>(e)])] +=
            cols_.val[static_cast<size_t>(e)] * v;
    }
    double pviol = 0.0, dviol = 0.0, csviol = 0.0, dualobj = 0.0;
    for (int j = 0; j < ncols_; ++j) {
      pviol = std::max(pviol, lo_[static_cast<size_t>(j)] - value_[static_cast<size_t>(j)]);
      pviol = std::max(pviol, value_[static_cast<size_t>(j)] - hi_[static_cast<size_t>(j)]);
      const double d = sol.reduced_cost[static_cast<size_t>(j)];
      switch (state_[static_cast<size_t>(j)]) {
        case VState::AtLower: dviol = std::max(dviol, -d); break;
        case VState::AtUpper: dviol = std::max(dviol, d); break;
        case VState::FreeNb: dviol = std::max(dviol, std::abs(d)); break;
        case VState::Basic: dviol = std::max(dviol, std::abs(d)); break;
      }
      if (state_[static_cast<size_t>(j)] != VState::Basic) {
        if (d > 0.0 && std::isfinite(lo_[static_cast<size_t>(j)]))
          dualobj += d * lo_[static_cast<size_t>(j)];
        else if (d < 0.0 && std::isfinite(hi_[static_cast<size_t>(j)]))
          dualobj += d * hi_[static_cast<size_t>(j)];
      }
    }
    for (int r = 0; r < m_; ++r) {
      const double rlo = base_lo_[static_cast<size_t>(ncols_ + r)];
      const double rhi = base_hi_[static_cast<size_t>(ncols_ + r)];
      const double act = activity[static_cast<size_t>(r)];
      pviol = std::max(pviol, rlo - act);
      pviol = std::max(pviol, act - rhi);
      const double y = sol.row_dual[static_cast<size_t>(r)];
      if (y > 0.0) {
        if (std::isfinite(rlo)) {
          dualobj += y * rlo;
          csviol = std::max(csviol, std::abs(y * (act - rlo)) / (1.0 + std::abs(rlo)));
        } else {
          dviol = std::max(dviol, y);
        }
      } else if (y < 0.0) {
        if (std::isfinite(rhi)) {
          dualobj += y * rhi;
          csviol = std::max(csviol, std::abs(y * (rhi - act)) / (1.0 + std::abs(rhi)));
        } else {
          dviol = std::max(dviol, -y);
        }
      }
    }
    sol.max_primal_violation = std::max(pviol, 0.0);
    sol.max_dual_violation = std::max(dviol, 0.0);
    sol.max_cs_violation = csviol;
    sol.dual_objective = dualobj;
    sol.duality_gap_rel =
        std::abs(sol.objective - dualobj) / std::max(1.0, std::abs(sol.objective));
    return sol;
  }
};

std::vector<int> to_fix_vector(const std::vector<std::uint8_t>* fixed, size_t nbin) {
  std::vector<int> fix(nbin, -1);
  if (fixed) {
    if (fixed->size() != nbin)
      fail(ErrorKind::Solver, "binary assignment covers " + std::to_string(fixed->size()) +
                                  " of " + std::to_string(nbin) + " binaries");
    for (size_t b = 0; b < nbin; ++b) fix[b] = (*fixed)[b] ? 1 : 0;
  }
  return fix;
}

}  // namespace

std::vector<int> binary_columns(const MarketProgram& prog) {
  std::vector<int> cols;
  for (int j = 0; j < prog.num_vars(); ++j)
    if (prog.vars[static_cast<size_t>(j)].is_binary) cols.push_back(j);
  return cols;
}

LpSolution solve_lp(const MarketProgram& prog, const SimplexOptions& opt,
                    const std::vector<std::uint8_t>* fixed) {
  Simplex splx(prog, opt);
  return splx.solve(to_fix_vector(fixed, splx.binaries().size()));
}

LpSolution resolve_fixed(const MarketProgram& prog, const std::vector<std::uint8_t>& assignment,
                         const SimplexOptions& opt) {
  return solve_lp(prog, opt, &assignment);
}

MipSolution solve_mip(const MarketProgram& prog, const MipOptions& opt) {
  Simplex splx(prog, opt.lp);
  const auto& bins = splx.binaries();
  const size_t nbin = bins.size();

  MipSolution out;
  out.bound = -kInf;

  struct Node {
    double bound;
    long seq;
    std::vector<int> fix;
  };
  auto cmp = [](const Node& a, const Node& b) {
    return a.bound > b.bound || (a.bound == b.bound && a.seq > b.seq);
  };
  std::priority_queue<Node, std::vector<Node>, decltype(cmp)> open(cmp);

  long seq = 0;
  open.push({-kInf, seq++, std::vector<int>(nbin, -1)});

  double incumbent = kInf;
  bool have_incumbent = false;
  long nodes = 0;

  auto gap_ok = [&](double bound) {
    return have_incumbent && bound >= incumbent - opt.gap * std::max(1.0, std::abs(incumbent));
  };

  while (!open.empty()) {
    if (nodes >= opt.node_limit) {
      out.status = MipStatus::NodeLimit;
      out.bound = open.top().bound;
      return out;
    }
    Node node = open.top();
    open.pop();
    if (gap_ok(node.bound)) break;  // best-first: everything left is fathomed
    ++nodes;

    LpSolution lp = splx.solve(node.fix);
    if (lp.status == LpStatus::Infeasible) continue;
    if (lp.status == LpStatus::Unbounded)
      fail(ErrorKind::Solver, "MILP relaxation is unbounded");
    if (lp.status != LpStatus::Optimal)
      fail(ErrorKind::Solver, "LP solve failed inside branch-and-bound (status " +
                                  std::to_string(static_cast<int>(lp.status)) + ")");
    if (gap_ok(lp.objective)) continue;

    // Most fractional binary; ties to the lowest ordinal.
    int branch = -1;
    double best_frac = opt.integrality_tol;
    for (size_t b = 0; b < nbin; ++b) {
      const double v = lp.x[static_cast<size_t>(bins[b])];
      const double frac = std::min(v - std::floor(v), std::ceil(v) - v);
      const double dist = std::abs(v - std::round(v));
      if (dist <= opt.integrality_tol) continue;
      const double score = 0.5 - std::abs(frac - 0.5);
      if (branch < 0 || score > best_frac + 1e-15) {
        branch = static_cast<int>(b);
        best_frac = score;
      }
    }

    if (branch < 0) {
      // Integral: candidate incumbent.
      if (!have_incumbent || lp.objective < incumbent) {
        incumbent = lp.objective;
        have_incumbent = true;
        out.x = lp.x;
        out.binary_values.assign(nbin, 0);
        for (size_t b = 0; b < nbin; ++b)
          out.binary_values[b] =
              static_cast<std::uint8_t>(std::lround(lp.x[static_cast<size_t>(bins[b])]));
      }
      continue;
    }

    for (int val = 0; val <= 1; ++val) {
      Node child{lp.objective, seq++, node.fix};
      child.fix[static_cast<size_t>(branch)] = val;
      open.push(child);
    }
  }

  out.nodes = nodes;
  if (!have_incumbent) {
    out.status = MipStatus::Infeasible;
    return out;
  }
  out.status = MipStatus::Optimal;
  out.objective = incumbent;
  out.bound = open.empty() ? incumbent : std::min(incumbent, open.top().bound);
  if (out.bound == -kInf) out.bound = incumbent;
  return out;
}

}  // namespace smce
