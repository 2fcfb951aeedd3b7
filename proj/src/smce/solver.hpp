#pragma once

// Bounded-variable revised simplex with dual extraction, plus best-bound
// branch-and-bound over the program's binary variables.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "smce/program.hpp"

namespace smce {

struct SimplexOptions {
  double tol_feas = 1e-8;   // absolute row/bound feasibility
  double tol_dual = 1e-8;   // reduced-cost feasibility
  double tol_cs = 1e-7;     // complementary slackness audit
  double ratio_eps = 1e-10; // smallest usable ratio-test denominator
  int max_iterations = 500000;
  int refactor_interval = 100;  // pivots between basis refactorizations
  int stall_limit = 50;         // degenerate pivots before Bland's rule
  std::ostream* trace = nullptr;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit, Numerical };

struct LpSolution {
  LpStatus status = LpStatus::Numerical;
  std::vector<double> x;             // structural variable values
  std::vector<double> row_dual;      // shadow price per row (d obj / d rhs)
  std::vector<double> reduced_cost;  // per structural variable
  double objective = 0.0;
  double dual_objective = 0.0;
  int iterations = 0;

  // Optimality certificates, filled on every solve that reaches Optimal.
  double max_primal_violation = 0.0;
  double max_dual_violation = 0.0;
  double max_cs_violation = 0.0;
  double duality_gap_rel = 0.0;
};

enum class MipStatus { Optimal, Infeasible, NodeLimit };

struct MipOptions {
  double gap = 1e-6;  // relative optimality gap
  long node_limit = 1000000;
  double integrality_tol = 1e-7;
  SimplexOptions lp;
};

struct MipSolution {
  MipStatus status = MipStatus::Infeasible;
  std::vector<double> x;  // incumbent structural values
  double objective = 0.0;
  double bound = 0.0;  // proven lower bound
  long nodes = 0;
  std::vector<std::uint8_t> binary_values;  // by binary ordinal (column order)
};

/// Solves the LP with binaries relaxed to their [0,1] bounds. `fixed`, when
/// given, pins every binary (by ordinal) instead.
LpSolution solve_lp(const MarketProgram& prog, const SimplexOptions& opt = {},
                    const std::vector<std::uint8_t>* fixed = nullptr);

/// Branch-and-bound over the binaries: most-fractional branching, best-bound
/// node selection, deterministic tie-breaking.
MipSolution solve_mip(const MarketProgram& prog, const MipOptions& opt = {});

/// LP restriction with all binaries fixed to the given assignment; duals are
/// the pricing product.
LpSolution resolve_fixed(const MarketProgram& prog, const std::vector<std::uint8_t>& assignment,
                         const SimplexOptions& opt = {});

/// Columns of the binary variables in program order.
std::vector<int> binary_columns(const MarketProgram& prog);

}  // namespace smce
