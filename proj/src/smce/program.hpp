#pragma once

// Sparse mixed-integer linear program produced by the formulation builders,
// together with a directory that addresses every variable and constraint row
// by the market entity it models.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace smce {

constexpr double kInf = std::numeric_limits<double>::infinity();

// First-stage (market) variables, then the per-scenario (system) block.
enum class VarKind : std::uint8_t {
  SchedGen,       // P^s  scheduled output of unit i at t
  BlockGen,       // p    accepted offer block m of unit i at t
  SchedWind,      // scheduled wind at t
  SchedLoad,      // L^s  scheduled consumption of load j at t
  ResUpGen,       // scheduled up spinning reserve, unit i
  ResDnGen,       // scheduled down spinning reserve, unit i
  ResNsGen,       // scheduled non-spinning reserve, unit i
  ResUpLoad,      // scheduled up reserve, load j
  ResDnLoad,      // scheduled down reserve, load j
  StartupCost,    // day-ahead startup cost, unit i
  Commit,         // binary on/off of unit i at t
  ScenGen,        // actual output of unit i at t in scenario w
  ScenBlockDev,   // deployment of block m (signed)
  ScenResUpLoad,  // deployed load reduction
  ScenResDnLoad,  // deployed load increase
  ScenShed,       // involuntarily shed load
  ScenConsumed,   // post-reserve consumption target
  ScenFlow,       // line flow
  ScenAngle,      // bus voltage angle
  ScenStartupCost,// in-scenario startup cost, unit i
  ScenCommit,     // binary on/off of unit i at t in scenario w
};

enum class RowKind : std::uint8_t {
  MarketBalance,  // supply = demand per period
  GenMin,         // scheduled output above p_min when committed
  GenMax,
  BlockLink,      // scheduled output equals block sum
  ResUpCap,       // reserve gated by commitment
  ResDnCap,
  ResNsCap,       // non-spinning gated by (1 - commitment)
  StartupDef,     // startup cost lower bound
  NodeBalance,    // per bus, period, scenario
  FlowDef,        // flow = B * angle difference
  ScenGenMin,
  ScenGenMax,
  DeployLink,     // actual = scheduled + block deployments
  DeployLo,       // deployments above -R^D
  DeployHi,       // deployments below R^U + R^NS
  BlockDevLo,     // block schedule + deployment stays in [0, size]
  BlockDevHi,
  ConsumeLink,    // consumption target = schedule - up + down deployment
  ScenResUpCap,   // deployment within scheduled load reserve
  ScenResDnCap,
  ShedCap,        // shed bounded by the consumption target
  ScenStartupDef,
  ScenCommitGate, // scenario startup forbidden without a non-spinning offer
};

struct VarRef {
  VarKind kind{};
  int i = -1;  // generator / load / line / bus index depending on kind
  int m = -1;  // block index
  int t = -1;  // period
  int w = -1;  // scenario
};

struct RowRef {
  RowKind kind{};
  int a = -1;  // entity index (bus / unit / load / line)
  int m = -1;
  int t = -1;
  int w = -1;
};

struct Variable {
  VarRef ref;
  double lo = 0.0;
  double hi = kInf;
  double obj = 0.0;
  bool is_binary = false;
};

struct Row {
  RowRef ref;
  double lo = -kInf;  // row activity bounds; equality when lo == hi
  double hi = kInf;
  int begin = 0;      // entry range in the sparse arrays
  int end = 0;
};

// Index arithmetic for the documented variable layout: all first-stage
// periods first, then one block per scenario.
struct Directory {
  int ng = 0, nl = 0, nbus = 0, nlines = 0, nt = 0, nw = 0;
  int nb_total = 0;               // total offer blocks
  std::vector<int> block_base;    // per unit, prefix sum of block counts
  int stage1_per_t = 0;
  int scen_per_t = 0;
  int scen_base = 0;              // first scenario variable

  int sched_gen(int i, int t) const { return t * stage1_per_t + i; }
  int block_gen(int i, int m, int t) const {
    return t * stage1_per_t + ng + block_base[static_cast<size_t>(i)] + m;
  }
  int sched_wind(int t) const { return t * stage1_per_t + ng + nb_total; }
  int sched_load(int j, int t) const { return t * stage1_per_t + ng + nb_total + 1 + j; }
  int res_up_gen(int i, int t) const { return t * stage1_per_t + ng + nb_total + 1 + nl + i; }
  int res_dn_gen(int i, int t) const { return res_up_gen(i, t) + ng; }
  int res_ns_gen(int i, int t) const { return res_up_gen(i, t) + 2 * ng; }
  int res_up_load(int j, int t) const { return t * stage1_per_t + 4 * ng + nb_total + 1 + nl + j; }
  int res_dn_load(int j, int t) const { return res_up_load(j, t) + nl; }
  int startup_cost(int i, int t) const { return t * stage1_per_t + 4 * ng + nb_total + 1 + 3 * nl + i; }
  int commit(int i, int t) const { return startup_cost(i, t) + ng; }

  int scen_offset(int t, int w) const { return scen_base + (w * nt + t) * scen_per_t; }
  int scen_gen(int i, int t, int w) const { return scen_offset(t, w) + i; }
  int block_dev(int i, int m, int t, int w) const {
    return scen_offset(t, w) + ng + block_base[static_cast<size_t>(i)] + m;
  }
  int scen_res_up_load(int j, int t, int w) const { return scen_offset(t, w) + ng + nb_total + j; }
  int scen_res_dn_load(int j, int t, int w) const { return scen_res_up_load(j, t, w) + nl; }
  int shed(int j, int t, int w) const { return scen_res_up_load(j, t, w) + 2 * nl; }
  int consumed(int j, int t, int w) const { return scen_res_up_load(j, t, w) + 3 * nl; }
  int flow(int l, int t, int w) const { return scen_offset(t, w) + ng + nb_total + 4 * nl + l; }
  int angle(int n, int t, int w) const {
    return scen_offset(t, w) + ng + nb_total + 4 * nl + nlines + n;
  }
  int scen_startup(int i, int t, int w) const {
    return scen_offset(t, w) + ng + nb_total + 4 * nl + nlines + nbus + i;
  }
  int scen_commit(int i, int t, int w) const { return scen_startup(i, t, w) + ng; }

  int num_vars() const { return scen_base + nw * nt * scen_per_t; }
};

struct MarketProgram {
  std::vector<Variable> vars;
  std::vector<Row> rows;
  std::vector<int> entry_col;
  std::vector<double> entry_val;
  Directory dir;

  // Row addressing for dual extraction.
  std::vector<int> market_balance_rows;  // by t
  std::vector<int> node_balance_rows;    // by (w * nt + t) * nbus + n

  // Model data carried along for pricing and reporting.
  std::vector<double> probabilities;  // per scenario
  std::vector<double> period_hours;
  int wind_bus_index = -1;
  int reference_bus_index = 0;

  int num_vars() const { return static_cast<int>(vars.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  int num_binaries() const;
  int market_balance_row(int t) const { return market_balance_rows[static_cast<size_t>(t)]; }
  int node_balance_row(int n, int t, int w) const {
    return node_balance_rows[static_cast<size_t>((w * dir.nt + t) * dir.nbus + n)];
  }
};

std::string to_string(const VarRef& ref);
std::string to_string(const RowRef& ref);

}  // namespace smce
