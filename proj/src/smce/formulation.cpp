#include "smce/formulation.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "smce/errors.hpp"

namespace smce {

namespace {

class ProgramBuilder {
public:
  ProgramBuilder(const Network& net, const ScenarioSet& scen) : net_(net), scen_(scen) {
    Directory& d = prog_.dir;
    d.ng = static_cast<int>(net.generators.size());
    d.nl = static_cast<int>(net.loads.size());
    d.nbus = static_cast<int>(net.buses.size());
    d.nlines = static_cast<int>(net.lines.size());
    d.nt = net.horizon;
    d.nw = scen.count();
    d.block_base.resize(net.generators.size());
    int nb = 0;
    for (size_t i = 0; i < net.generators.size(); ++i) {
      d.block_base[i] = nb;
      nb += static_cast<int>(net.generators[i].blocks.size());
    }
    d.nb_total = nb;
    d.stage1_per_t = 6 * d.ng + d.nb_total + 3 * d.nl + 1;
    d.scen_per_t = 3 * d.ng + d.nb_total + 4 * d.nl + d.nlines + d.nbus;
    d.scen_base = d.nt * d.stage1_per_t;

    prog_.probabilities.reserve(scen.scenarios.size());
    for (const auto& s : scen.scenarios) prog_.probabilities.push_back(s.probability);
    prog_.period_hours = net.period_hours;
    prog_.wind_bus_index = net.bus_index(net.wind.bus);
    prog_.reference_bus_index = 0;  // lowest-numbered bus fixes the angle gauge

    incidence_ = incidence_and_susceptance(net);
  }

  MarketProgram build() {
    define_variables();
    build_objective();
    build_first_stage();
    for (int w = 0; w < prog_.dir.nw; ++w) {
      build_second_stage(w);
      build_linking(w);
    }
    return std::move(prog_);
  }

private:
  const Network& net_;
  const ScenarioSet& scen_;
  MarketProgram prog_;
  IncidenceStructure incidence_;

  Variable& var(int index) { return prog_.vars[static_cast<size_t>(index)]; }

  void set_var(int index, VarRef ref, double lo, double hi, bool binary = false) {
    Variable& v = prog_.vars[static_cast<size_t>(index)];
    v.ref = ref;
    v.lo = lo;
    v.hi = hi;
    v.is_binary = binary;
  }

  int begin_row(RowRef ref, double lo, double hi) {
    Row row;
    row.ref = ref;
    row.lo = lo;
    row.hi = hi;
    row.begin = static_cast<int>(prog_.entry_col.size());
    row.end = row.begin;
    prog_.rows.push_back(row);
    return static_cast<int>(prog_.rows.size()) - 1;
  }

  void coef(int col, double value) {
    prog_.entry_col.push_back(col);
    prog_.entry_val.push_back(value);
    prog_.rows.back().end = static_cast<int>(prog_.entry_col.size());
  }

  void define_variables() {
    const Directory& d = prog_.dir;
    prog_.vars.resize(static_cast<size_t>(d.num_vars()));

    for (int t = 0; t < d.nt; ++t) {
      const auto ut = static_cast<size_t>(t);
      for (int i = 0; i < d.ng; ++i) {
        const auto& g = net_.generators[static_cast<size_t>(i)];
        set_var(d.sched_gen(i, t), {VarKind::SchedGen, i, -1, t, -1}, 0.0, g.p_max);
        for (int m = 0; m < static_cast<int>(g.blocks.size()); ++m)
          set_var(d.block_gen(i, m, t), {VarKind::BlockGen, i, m, t, -1}, 0.0,
                  g.blocks[static_cast<size_t>(m)].size);
        set_var(d.res_up_gen(i, t), {VarKind::ResUpGen, i, -1, t, -1}, 0.0, g.reserve.up_max);
        set_var(d.res_dn_gen(i, t), {VarKind::ResDnGen, i, -1, t, -1}, 0.0, g.reserve.dn_max);
        set_var(d.res_ns_gen(i, t), {VarKind::ResNsGen, i, -1, t, -1}, 0.0, g.reserve.ns_max);
        set_var(d.startup_cost(i, t), {VarKind::StartupCost, i, -1, t, -1}, 0.0, kInf);
        set_var(d.commit(i, t), {VarKind::Commit, i, -1, t, -1}, 0.0, 1.0, true);
      }
      set_var(d.sched_wind(t), {VarKind::SchedWind, -1, -1, t, -1}, net_.wind.p_min_offer[ut],
              net_.wind.p_max_offer[ut]);
      for (int j = 0; j < d.nl; ++j) {
        const auto& l = net_.loads[static_cast<size_t>(j)];
        set_var(d.sched_load(j, t), {VarKind::SchedLoad, j, -1, t, -1}, l.demand_min[ut],
                l.demand_max[ut]);
        set_var(d.res_up_load(j, t), {VarKind::ResUpLoad, j, -1, t, -1}, 0.0, l.reserve.up_max[ut]);
        set_var(d.res_dn_load(j, t), {VarKind::ResDnLoad, j, -1, t, -1}, 0.0, l.reserve.dn_max[ut]);
      }
    }

    for (int w = 0; w < d.nw; ++w) {
      for (int t = 0; t < d.nt; ++t) {
        for (int i = 0; i < d.ng; ++i) {
          const auto& g = net_.generators[static_cast<size_t>(i)];
          set_var(d.scen_gen(i, t, w), {VarKind::ScenGen, i, -1, t, w}, 0.0, g.p_max);
          for (int m = 0; m < static_cast<int>(g.blocks.size()); ++m) {
            const double size = g.blocks[static_cast<size_t>(m)].size;
            set_var(d.block_dev(i, m, t, w), {VarKind::ScenBlockDev, i, m, t, w}, -size, size);
          }
          set_var(d.scen_startup(i, t, w), {VarKind::ScenStartupCost, i, -1, t, w}, 0.0, kInf);
          set_var(d.scen_commit(i, t, w), {VarKind::ScenCommit, i, -1, t, w}, 0.0, 1.0, true);
        }
        for (int j = 0; j < d.nl; ++j) {
          const auto& l = net_.loads[static_cast<size_t>(j)];
          const auto ut = static_cast<size_t>(t);
          set_var(d.scen_res_up_load(j, t, w), {VarKind::ScenResUpLoad, j, -1, t, w}, 0.0,
                  l.reserve.up_max[ut]);
          set_var(d.scen_res_dn_load(j, t, w), {VarKind::ScenResDnLoad, j, -1, t, w}, 0.0,
                  l.reserve.dn_max[ut]);
          set_var(d.shed(j, t, w), {VarKind::ScenShed, j, -1, t, w}, 0.0, kInf);
          set_var(d.consumed(j, t, w), {VarKind::ScenConsumed, j, -1, t, w}, 0.0, kInf);
        }
        for (int l = 0; l < d.nlines; ++l) {
          const double cap = net_.lines[static_cast<size_t>(l)].flow_limit;
          set_var(d.flow(l, t, w), {VarKind::ScenFlow, l, -1, t, w}, -cap, cap);  // Eq. 21
        }
        for (int n = 0; n < d.nbus; ++n) {
          const bool ref_bus = (n == prog_.reference_bus_index);
          set_var(d.angle(n, t, w), {VarKind::ScenAngle, n, -1, t, w}, ref_bus ? 0.0 : -kInf,
                  ref_bus ? 0.0 : kInf);
        }
      }
    }
  }

  // The nine cost components: startup offers; energy minus utility; unit and
  // load reserve capacity offers; wind at its (zero) offer price; then the
  // probability-weighted scenario costs: in-scenario startups, block
  // redeployment, load reserve deployment, and shedding at VOLL.
  void build_objective() {
    const Directory& d = prog_.dir;
    for (int t = 0; t < d.nt; ++t) {
      const double dt = prog_.period_hours[static_cast<size_t>(t)];
      for (int i = 0; i < d.ng; ++i) {
        const auto& g = net_.generators[static_cast<size_t>(i)];
        var(d.startup_cost(i, t)).obj = 1.0;
        for (int m = 0; m < static_cast<int>(g.blocks.size()); ++m)
          var(d.block_gen(i, m, t)).obj = dt * g.blocks[static_cast<size_t>(m)].price;
        var(d.res_up_gen(i, t)).obj = dt * g.reserve.up_price;
        var(d.res_dn_gen(i, t)).obj = dt * g.reserve.dn_price;
        var(d.res_ns_gen(i, t)).obj = dt * g.reserve.ns_price;
      }
      for (int j = 0; j < d.nl; ++j) {
        const auto& l = net_.loads[static_cast<size_t>(j)];
        var(d.sched_load(j, t)).obj = -dt * l.utility_bid;
        var(d.res_up_load(j, t)).obj = dt * l.reserve.up_price;
        var(d.res_dn_load(j, t)).obj = dt * l.reserve.dn_price;
      }
      var(d.sched_wind(t)).obj = dt * net_.wind.offer_price;  // zero by invariant

      for (int w = 0; w < d.nw; ++w) {
        const double pw = prog_.probabilities[static_cast<size_t>(w)];
        for (int i = 0; i < d.ng; ++i) {
          const auto& g = net_.generators[static_cast<size_t>(i)];
          var(d.scen_startup(i, t, w)).obj = pw;
          for (int m = 0; m < static_cast<int>(g.blocks.size()); ++m)
            var(d.block_dev(i, m, t, w)).obj = pw * dt * g.blocks[static_cast<size_t>(m)].price;
        }
        for (int j = 0; j < d.nl; ++j) {
          const auto& l = net_.loads[static_cast<size_t>(j)];
          var(d.scen_res_up_load(j, t, w)).obj = pw * dt * l.utility_bid;
          var(d.scen_res_dn_load(j, t, w)).obj = -pw * dt * l.utility_bid;
          var(d.shed(j, t, w)).obj = pw * dt * l.voll;
        }
      }
    }
  }

  void build_first_stage() {
    const Directory& d = prog_.dir;
    prog_.market_balance_rows.resize(static_cast<size_t>(d.nt));

    for (int t = 0; t < d.nt; ++t) {
      // Market balance: total scheduled generation plus wind equals demand.
      int row = begin_row({RowKind::MarketBalance, -1, -1, t, -1}, 0.0, 0.0);
      prog_.market_balance_rows[static_cast<size_t>(t)] = row;
      for (int i = 0; i < d.ng; ++i) coef(d.sched_gen(i, t), 1.0);
      coef(d.sched_wind(t), 1.0);
      for (int j = 0; j < d.nl; ++j) coef(d.sched_load(j, t), -1.0);

      for (int i = 0; i < d.ng; ++i) {
        const auto& g = net_.generators[static_cast<size_t>(i)];
        begin_row({RowKind::GenMin, i, -1, t, -1}, 0.0, kInf);
        coef(d.sched_gen(i, t), 1.0);
        coef(d.commit(i, t), -g.p_min);

        begin_row({RowKind::GenMax, i, -1, t, -1}, -kInf, 0.0);
        coef(d.sched_gen(i, t), 1.0);
        coef(d.commit(i, t), -g.p_max);

        begin_row({RowKind::BlockLink, i, -1, t, -1}, 0.0, 0.0);
        coef(d.sched_gen(i, t), 1.0);
        for (int m = 0; m < static_cast<int>(g.blocks.size()); ++m)
          coef(d.block_gen(i, m, t), -1.0);

        begin_row({RowKind::ResUpCap, i, -1, t, -1}, -kInf, 0.0);
        coef(d.res_up_gen(i, t), 1.0);
        coef(d.commit(i, t), -g.reserve.up_max);

        begin_row({RowKind::ResDnCap, i, -1, t, -1}, -kInf, 0.0);
        coef(d.res_dn_gen(i, t), 1.0);
        coef(d.commit(i, t), -g.reserve.dn_max);

        begin_row({RowKind::ResNsCap, i, -1, t, -1}, -kInf, g.reserve.ns_max);
        coef(d.res_ns_gen(i, t), 1.0);
        coef(d.commit(i, t), g.reserve.ns_max);

        // Startup charged on 0 -> 1 transitions, against the initial status
        // at the first period.
        if (t == 0) {
          const double u0 = g.initial_on ? 1.0 : 0.0;
          begin_row({RowKind::StartupDef, i, -1, t, -1}, -g.startup_cost * u0, kInf);
          coef(d.startup_cost(i, t), 1.0);
          coef(d.commit(i, t), -g.startup_cost);
        } else {
          begin_row({RowKind::StartupDef, i, -1, t, -1}, 0.0, kInf);
          coef(d.startup_cost(i, t), 1.0);
          coef(d.commit(i, t), -g.startup_cost);
          coef(d.commit(i, t - 1), g.startup_cost);
        }
      }
    }
  }

  void build_second_stage(int w) {
    const Directory& d = prog_.dir;
    if (prog_.node_balance_rows.empty())
      prog_.node_balance_rows.resize(static_cast<size_t>(d.nw * d.nt * d.nbus), -1);

    const auto& traj = scen_.scenarios[static_cast<size_t>(w)].trajectory;

    for (int t = 0; t < d.nt; ++t) {
      // Nodal balance; the wind bus carries the scenario injection on the rhs.
      for (int n = 0; n < d.nbus; ++n) {
        const double rhs = (n == prog_.wind_bus_index) ? -traj[static_cast<size_t>(t)] : 0.0;
        int row = begin_row({RowKind::NodeBalance, n, -1, t, w}, rhs, rhs);
        prog_.node_balance_rows[static_cast<size_t>((w * d.nt + t) * d.nbus + n)] = row;
        for (int i = 0; i < d.ng; ++i)
          if (net_.bus_index(net_.generators[static_cast<size_t>(i)].bus) == n)
            coef(d.scen_gen(i, t, w), 1.0);
        for (int j = 0; j < d.nl; ++j)
          if (net_.bus_index(net_.loads[static_cast<size_t>(j)].bus) == n) {
            coef(d.consumed(j, t, w), -1.0);
            coef(d.shed(j, t, w), 1.0);
          }
        for (const auto& [line, sign] : incidence_.by_bus[static_cast<size_t>(n)].lines)
          coef(d.flow(line, t, w), -static_cast<double>(sign));
      }

      // Flow definition with the loss term carried structurally at zero.
      for (const auto& inc : incidence_.flows) {
        const double loss = 0.0;
        begin_row({RowKind::FlowDef, inc.line, -1, t, w}, loss / 2.0, loss / 2.0);
        coef(d.flow(inc.line, t, w), 1.0);
        coef(d.angle(inc.from, t, w), -inc.susceptance * 100.0);  // MW on a 100 MVA base
        coef(d.angle(inc.to, t, w), inc.susceptance * 100.0);
      }

      for (int i = 0; i < d.ng; ++i) {
        const auto& g = net_.generators[static_cast<size_t>(i)];
        begin_row({RowKind::ScenGenMin, i, -1, t, w}, 0.0, kInf);
        coef(d.scen_gen(i, t, w), 1.0);
        coef(d.scen_commit(i, t, w), -g.p_min);

        begin_row({RowKind::ScenGenMax, i, -1, t, w}, -kInf, 0.0);
        coef(d.scen_gen(i, t, w), 1.0);
        coef(d.scen_commit(i, t, w), -g.p_max);
      }
    }
  }

  // Couples the scenario stage to the market stage: deployments draw on
  // scheduled reserves, block deployments respect offered block sizes,
  // consumption follows scheduled demand plus deployed load reserve, and
  // in-scenario startups are charged like day-ahead ones.
  void build_linking(int w) {
    const Directory& d = prog_.dir;
    for (int t = 0; t < d.nt; ++t) {
      for (int i = 0; i < d.ng; ++i) {
        const auto& g = net_.generators[static_cast<size_t>(i)];
        const int nblocks = static_cast<int>(g.blocks.size());

        begin_row({RowKind::DeployLink, i, -1, t, w}, 0.0, 0.0);
        coef(d.scen_gen(i, t, w), 1.0);
        coef(d.sched_gen(i, t), -1.0);
        for (int m = 0; m < nblocks; ++m) coef(d.block_dev(i, m, t, w), -1.0);

        begin_row({RowKind::DeployLo, i, -1, t, w}, 0.0, kInf);
        for (int m = 0; m < nblocks; ++m) coef(d.block_dev(i, m, t, w), 1.0);
        coef(d.res_dn_gen(i, t), 1.0);

        begin_row({RowKind::DeployHi, i, -1, t, w}, -kInf, 0.0);
        for (int m = 0; m < nblocks; ++m) coef(d.block_dev(i, m, t, w), 1.0);
        coef(d.res_up_gen(i, t), -1.0);
        coef(d.res_ns_gen(i, t), -1.0);

        for (int m = 0; m < nblocks; ++m) {
          begin_row({RowKind::BlockDevLo, i, m, t, w}, 0.0, kInf);
          coef(d.block_gen(i, m, t), 1.0);
          coef(d.block_dev(i, m, t, w), 1.0);

          begin_row({RowKind::BlockDevHi, i, m, t, w}, -kInf, g.blocks[static_cast<size_t>(m)].size);
          coef(d.block_gen(i, m, t), 1.0);
          coef(d.block_dev(i, m, t, w), 1.0);
        }

        if (t == 0) {
          const double v0 = g.initial_on ? 1.0 : 0.0;
          begin_row({RowKind::ScenStartupDef, i, -1, t, w}, -g.startup_cost * v0, kInf);
          coef(d.scen_startup(i, t, w), 1.0);
          coef(d.scen_commit(i, t, w), -g.startup_cost);
        } else {
          begin_row({RowKind::ScenStartupDef, i, -1, t, w}, 0.0, kInf);
          coef(d.scen_startup(i, t, w), 1.0);
          coef(d.scen_commit(i, t, w), -g.startup_cost);
          coef(d.scen_commit(i, t - 1, w), g.startup_cost);
        }

        // Without a non-spinning offer a unit cannot start inside a scenario.
        if (g.reserve.ns_max <= 0.0) {
          begin_row({RowKind::ScenCommitGate, i, -1, t, w}, -kInf, 0.0);
          coef(d.scen_commit(i, t, w), 1.0);
          coef(d.commit(i, t), -1.0);
        }
      }

      for (int j = 0; j < d.nl; ++j) {
        begin_row({RowKind::ConsumeLink, j, -1, t, w}, 0.0, 0.0);
        coef(d.consumed(j, t, w), 1.0);
        coef(d.sched_load(j, t), -1.0);
        coef(d.scen_res_up_load(j, t, w), 1.0);
        coef(d.scen_res_dn_load(j, t, w), -1.0);

        begin_row({RowKind::ScenResUpCap, j, -1, t, w}, -kInf, 0.0);
        coef(d.scen_res_up_load(j, t, w), 1.0);
        coef(d.res_up_load(j, t), -1.0);

        begin_row({RowKind::ScenResDnCap, j, -1, t, w}, -kInf, 0.0);
        coef(d.scen_res_dn_load(j, t, w), 1.0);
        coef(d.res_dn_load(j, t), -1.0);

        begin_row({RowKind::ShedCap, j, -1, t, w}, -kInf, 0.0);
        coef(d.shed(j, t, w), 1.0);
        coef(d.consumed(j, t, w), -1.0);
      }
    }
  }
};

}  // namespace

MarketProgram assemble(const Network& net, const ScenarioSet& scen) {
  if (scen.horizon() != net.horizon)
    fail(ErrorKind::Invariant, "scenario horizon " + std::to_string(scen.horizon()) +
                                   " differs from network horizon " + std::to_string(net.horizon));
  auto violations = validate(net);
  if (!violations.empty())
    fail(ErrorKind::Invariant,
         "network fails validation: " + violations.front().entity + ": " + violations.front().rule);
  return ProgramBuilder(net, scen).build();
}

int MarketProgram::num_binaries() const {
  int n = 0;
  for (const auto& v : vars) n += v.is_binary ? 1 : 0;
  return n;
}

std::vector<std::string> audit_symbol_coverage(const MarketProgram& prog) {
  std::vector<std::string> problems;
  const Directory& d = prog.dir;

  // Directory must be a bijection onto [0, num_vars) with matching tags.
  std::vector<int> hit(prog.vars.size(), 0);
  auto probe = [&](int index, VarKind kind) {
    if (index < 0 || index >= prog.num_vars()) {
      problems.push_back("directory index out of range for kind " +
                         std::to_string(static_cast<int>(kind)));
      return;
    }
    if (prog.vars[static_cast<size_t>(index)].ref.kind != kind)
      problems.push_back("directory tag mismatch at column " + std::to_string(index) +
                         ": " + to_string(prog.vars[static_cast<size_t>(index)].ref));
    ++hit[static_cast<size_t>(index)];
  };

  for (int t = 0; t < d.nt; ++t) {
    for (int i = 0; i < d.ng; ++i) {
      probe(d.sched_gen(i, t), VarKind::SchedGen);
      const int nb = (i + 1 < d.ng ? d.block_base[static_cast<size_t>(i) + 1] : d.nb_total) -
                     d.block_base[static_cast<size_t>(i)];
      for (int m = 0; m < nb; ++m) probe(d.block_gen(i, m, t), VarKind::BlockGen);
      probe(d.res_up_gen(i, t), VarKind::ResUpGen);
      probe(d.res_dn_gen(i, t), VarKind::ResDnGen);
      probe(d.res_ns_gen(i, t), VarKind::ResNsGen);
      probe(d.startup_cost(i, t), VarKind::StartupCost);
      probe(d.commit(i, t), VarKind::Commit);
    }
    probe(d.sched_wind(t), VarKind::SchedWind);
    for (int j = 0; j < d.nl; ++j) {
      probe(d.sched_load(j, t), VarKind::SchedLoad);
      probe(d.res_up_load(j, t), VarKind::ResUpLoad);
      probe(d.res_dn_load(j, t), VarKind::ResDnLoad);
    }
    for (int w = 0; w < d.nw; ++w) {
      for (int i = 0; i < d.ng; ++i) {
        probe(d.scen_gen(i, t, w), VarKind::ScenGen);
        const int nb = (i + 1 < d.ng ? d.block_base[static_cast<size_t>(i) + 1] : d.nb_total) -
                       d.block_base[static_cast<size_t>(i)];
        for (int m = 0; m < nb; ++m) probe(d.block_dev(i, m, t, w), VarKind::ScenBlockDev);
        probe(d.scen_startup(i, t, w), VarKind::ScenStartupCost);
        probe(d.scen_commit(i, t, w), VarKind::ScenCommit);
      }
      for (int j = 0; j < d.nl; ++j) {
        probe(d.scen_res_up_load(j, t, w), VarKind::ScenResUpLoad);
        probe(d.scen_res_dn_load(j, t, w), VarKind::ScenResDnLoad);
        probe(d.shed(j, t, w), VarKind::ScenShed);
        probe(d.consumed(j, t, w), VarKind::ScenConsumed);
      }
      for (int l = 0; l < d.nlines; ++l) probe(d.flow(l, t, w), VarKind::ScenFlow);
      for (int n = 0; n < d.nbus; ++n) probe(d.angle(n, t, w), VarKind::ScenAngle);
    }
  }
  for (size_t c = 0; c < hit.size(); ++c)
    if (hit[c] != 1)
      problems.push_back("column " + std::to_string(c) + " (" + to_string(prog.vars[c].ref) +
                         ") resolved " + std::to_string(hit[c]) + " times");

  // Every row references valid columns; balance rows addressable.
  for (const auto& row : prog.rows) {
    for (int e = row.begin; e < row.end; ++e) {
      const int c = prog.entry_col[static_cast<size_t>(e)];
      if (c < 0 || c >= prog.num_vars())
        problems.push_back("row " + to_string(row.ref) + " references invalid column " +
                           std::to_string(c));
    }
  }
  for (int t = 0; t < d.nt; ++t) {
    if (prog.market_balance_row(t) < 0) problems.push_back("missing market balance row");
    for (int w = 0; w < d.nw; ++w)
      for (int n = 0; n < d.nbus; ++n)
        if (prog.node_balance_row(n, t, w) < 0)
          problems.push_back("missing node balance row n=" + std::to_string(n) +
                             " t=" + std::to_string(t) + " w=" + std::to_string(w));
  }
  return problems;
}

std::string to_string(const VarRef& r) {
  auto idx = [](int v) { return std::to_string(v + 1); };
  switch (r.kind) {
    case VarKind::SchedGen: return "PS_i" + idx(r.i) + "_t" + idx(r.t);
    case VarKind::BlockGen: return "PB_i" + idx(r.i) + "_m" + idx(r.m) + "_t" + idx(r.t);
    case VarKind::SchedWind: return "WS_t" + idx(r.t);
    case VarKind::SchedLoad: return "LS_j" + idx(r.i) + "_t" + idx(r.t);
    case VarKind::ResUpGen: return "RU_i" + idx(r.i) + "_t" + idx(r.t);
    case VarKind::ResDnGen: return "RD_i" + idx(r.i) + "_t" + idx(r.t);
    case VarKind::ResNsGen: return "RN_i" + idx(r.i) + "_t" + idx(r.t);
    case VarKind::ResUpLoad: return "RUL_j" + idx(r.i) + "_t" + idx(r.t);
    case VarKind::ResDnLoad: return "RDL_j" + idx(r.i) + "_t" + idx(r.t);
    case VarKind::StartupCost: return "CSU_i" + idx(r.i) + "_t" + idx(r.t);
    case VarKind::Commit: return "U_i" + idx(r.i) + "_t" + idx(r.t);
    case VarKind::ScenGen: return "PG_i" + idx(r.i) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case VarKind::ScenBlockDev:
      return "RB_i" + idx(r.i) + "_m" + idx(r.m) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case VarKind::ScenResUpLoad: return "RUJ_j" + idx(r.i) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case VarKind::ScenResDnLoad: return "RDJ_j" + idx(r.i) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case VarKind::ScenShed: return "SH_j" + idx(r.i) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case VarKind::ScenConsumed: return "LC_j" + idx(r.i) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case VarKind::ScenFlow: return "F_l" + idx(r.i) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case VarKind::ScenAngle: return "TH_n" + idx(r.i) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case VarKind::ScenStartupCost: return "CSW_i" + idx(r.i) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case VarKind::ScenCommit: return "V_i" + idx(r.i) + "_t" + idx(r.t) + "_w" + idx(r.w);
  }
  return "VAR";
}

std::string to_string(const RowRef& r) {
  auto idx = [](int v) { return std::to_string(v + 1); };
  switch (r.kind) {
    case RowKind::MarketBalance: return "MB_t" + idx(r.t);
    case RowKind::GenMin: return "GLO_i" + idx(r.a) + "_t" + idx(r.t);
    case RowKind::GenMax: return "GHI_i" + idx(r.a) + "_t" + idx(r.t);
    case RowKind::BlockLink: return "BLK_i" + idx(r.a) + "_t" + idx(r.t);
    case RowKind::ResUpCap: return "RUC_i" + idx(r.a) + "_t" + idx(r.t);
    case RowKind::ResDnCap: return "RDC_i" + idx(r.a) + "_t" + idx(r.t);
    case RowKind::ResNsCap: return "RNC_i" + idx(r.a) + "_t" + idx(r.t);
    case RowKind::StartupDef: return "SUC_i" + idx(r.a) + "_t" + idx(r.t);
    case RowKind::NodeBalance: return "BAL_n" + idx(r.a) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case RowKind::FlowDef: return "FLW_l" + idx(r.a) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case RowKind::ScenGenMin: return "VLO_i" + idx(r.a) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case RowKind::ScenGenMax: return "VHI_i" + idx(r.a) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case RowKind::DeployLink: return "DPL_i" + idx(r.a) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case RowKind::DeployLo: return "DLO_i" + idx(r.a) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case RowKind::DeployHi: return "DHI_i" + idx(r.a) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case RowKind::BlockDevLo:
      return "BDL_i" + idx(r.a) + "_m" + idx(r.m) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case RowKind::BlockDevHi:
      return "BDH_i" + idx(r.a) + "_m" + idx(r.m) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case RowKind::ConsumeLink: return "CLK_j" + idx(r.a) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case RowKind::ScenResUpCap: return "RUS_j" + idx(r.a) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case RowKind::ScenResDnCap: return "RDS_j" + idx(r.a) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case RowKind::ShedCap: return "SHC_j" + idx(r.a) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case RowKind::ScenStartupDef: return "SSU_i" + idx(r.a) + "_t" + idx(r.t) + "_w" + idx(r.w);
    case RowKind::ScenCommitGate: return "VGT_i" + idx(r.a) + "_t" + idx(r.t) + "_w" + idx(r.w);
  }
  return "ROW";
}

}  // namespace smce
