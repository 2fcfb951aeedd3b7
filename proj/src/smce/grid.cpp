#include "smce/grid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "smce/errors.hpp"

namespace smce {

using nlohmann::json;

namespace {

// Pulls a field, failing with the owning entity named in the message.
const json& need(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end())
    fail(ErrorKind::Parse, "missing field '" + std::string(key) + "' in " + where);
  return *it;
}

double need_num(const json& obj, const char* key, const std::string& where) {
  const json& v = need(obj, key, where);
  if (!v.is_number())
    fail(ErrorKind::Parse, "field '" + std::string(key) + "' in " + where + " is not a number");
  return v.get<double>();
}

int need_int(const json& obj, const char* key, const std::string& where) {
  const json& v = need(obj, key, where);
  if (!v.is_number_integer())
    fail(ErrorKind::Parse, "field '" + std::string(key) + "' in " + where + " is not an integer");
  return v.get<int>();
}

// A per-period series may be written as a scalar (broadcast) or an array of
// exactly `horizon` values.
std::vector<double> per_period(const json& v, int horizon, const std::string& where) {
  std::vector<double> out;
  if (v.is_number()) {
    out.assign(static_cast<size_t>(horizon), v.get<double>());
  } else if (v.is_array()) {
    if (static_cast<int>(v.size()) != horizon)
      fail(ErrorKind::Parse, where + ": expected " + std::to_string(horizon) +
                                 " per-period values, got " + std::to_string(v.size()));
    for (const auto& x : v) {
      if (!x.is_number()) fail(ErrorKind::Parse, where + ": non-numeric period value");
      out.push_back(x.get<double>());
    }
  } else {
    fail(ErrorKind::Parse, where + ": expected number or array");
  }
  return out;
}

std::vector<double> opt_per_period(const json& obj, const char* key, int horizon,
                                   const std::vector<double>& fallback,
                                   const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return fallback;
  return per_period(*it, horizon, where + "." + key);
}

Network parse_network(const json& doc) {
  Network net;
  net.name = doc.value("name", std::string("network"));
  net.horizon = need_int(doc, "horizon", "document root");
  if (net.horizon <= 0) fail(ErrorKind::Parse, "horizon must be positive");
  net.period_hours =
      per_period(need(doc, "period_hours", "document root"), net.horizon, "period_hours");

  const std::string root = "network '" + net.name + "'";

  for (const auto& b : need(doc, "buses", root)) {
    Bus bus;
    bus.id = need_int(b, "id", "bus entry");
    bus.name = b.value("name", "bus" + std::to_string(bus.id));
    net.buses.push_back(std::move(bus));
  }

  for (const auto& l : need(doc, "lines", root)) {
    Line line;
    line.from_bus = need_int(l, "from", "line entry");
    line.to_bus = need_int(l, "to", "line entry");
    const std::string where =
        "line " + std::to_string(line.from_bus) + "-" + std::to_string(line.to_bus);
    line.susceptance = need_num(l, "susceptance_pu", where);
    line.flow_limit = need_num(l, "flow_limit_mw", where);
    net.lines.push_back(line);
  }

  int gen_seq = 0;
  for (const auto& g : need(doc, "generators", root)) {
    GeneratorUnit unit;
    unit.id = g.value("id", ++gen_seq);
    gen_seq = unit.id;
    const std::string where = "generator " + std::to_string(unit.id);
    unit.bus = need_int(g, "bus", where);
    unit.name = g.value("name", "g" + std::to_string(unit.id));
    unit.p_min = need_num(g, "p_min", where);
    unit.p_max = need_num(g, "p_max", where);
    for (const auto& blk : need(g, "blocks", where)) {
      OfferBlock block;
      block.price = need_num(blk, "price", where + " block");
      block.size = need_num(blk, "size", where + " block");
      unit.blocks.push_back(block);
    }
    // Normalize to nondecreasing price so "marginal block" is well defined.
    std::stable_sort(unit.blocks.begin(), unit.blocks.end(),
                     [](const OfferBlock& a, const OfferBlock& b) { return a.price < b.price; });
    unit.startup_cost = need_num(g, "startup_cost", where);
    if (auto it = g.find("reserve"); it != g.end()) {
      const json& r = *it;
      unit.reserve.up_max = r.value("up_max", 0.0);
      unit.reserve.dn_max = r.value("dn_max", 0.0);
      unit.reserve.ns_max = r.value("ns_max", 0.0);
      unit.reserve.up_price = r.value("up_price", 0.0);
      unit.reserve.dn_price = r.value("dn_price", 0.0);
      unit.reserve.ns_price = r.value("ns_price", 0.0);
    }
    unit.initial_on = g.value("initial_on", false);
    net.generators.push_back(std::move(unit));
  }

  int load_seq = 0;
  for (const auto& l : need(doc, "loads", root)) {
    LoadPoint load;
    load.id = l.value("id", ++load_seq);
    load_seq = load.id;
    const std::string where = "load " + std::to_string(load.id);
    load.bus = need_int(l, "bus", where);
    load.name = l.value("name", "d" + std::to_string(load.id));
    load.demand = per_period(need(l, "demand", where), net.horizon, where + ".demand");
    load.demand_min = opt_per_period(l, "demand_min", net.horizon, load.demand, where);
    load.demand_max = opt_per_period(l, "demand_max", net.horizon, load.demand, where);
    load.utility_bid = l.value("utility_bid", 0.0);
    load.voll = need_num(l, "voll", where);
    if (auto it = l.find("reserve"); it != l.end()) {
      const json& r = *it;
      std::vector<double> zero(static_cast<size_t>(net.horizon), 0.0);
      load.reserve.up_max = opt_per_period(r, "up_max", net.horizon, zero, where + ".reserve");
      load.reserve.dn_max = opt_per_period(r, "dn_max", net.horizon, zero, where + ".reserve");
      load.reserve.up_price = r.value("up_price", 0.0);
      load.reserve.dn_price = r.value("dn_price", 0.0);
    } else {
      load.reserve.up_max.assign(static_cast<size_t>(net.horizon), 0.0);
      load.reserve.dn_max.assign(static_cast<size_t>(net.horizon), 0.0);
    }
    net.loads.push_back(std::move(load));
  }

  const json& w = need(doc, "wind", root);
  net.wind.bus = need_int(w, "bus", "wind");
  net.wind.p_min_offer = per_period(need(w, "p_min", "wind"), net.horizon, "wind.p_min");
  net.wind.p_max_offer = per_period(need(w, "p_max", "wind"), net.horizon, "wind.p_max");
  net.wind.offer_price = w.value("offer_price", 0.0);

  return net;
}

void check_or_throw(const Network& net) {
  auto violations = validate(net);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "network '" << net.name << "' violates " << violations.size() << " rule(s): ";
    for (size_t i = 0; i < violations.size() && i < 5; ++i) {
      if (i) msg << "; ";
      msg << violations[i].entity << ": " << violations[i].rule;
    }
    if (violations.size() > 5) msg << "; ...";
    fail(ErrorKind::Invariant, msg.str());
  }
}

}  // namespace

int Network::bus_index(int bus_id) const {
  for (size_t i = 0; i < buses.size(); ++i)
    if (buses[i].id == bus_id) return static_cast<int>(i);
  return -1;
}

double Network::system_peak_demand() const {
  double peak = 0.0;
  for (int t = 0; t < horizon; ++t) {
    double total = 0.0;
    for (const auto& l : loads) total += l.demand[static_cast<size_t>(t)];
    peak = std::max(peak, total);
  }
  return peak;
}

double Network::bus_peak_demand(int bus_id) const {
  double peak = 0.0;
  for (int t = 0; t < horizon; ++t) {
    double total = 0.0;
    for (const auto& l : loads)
      if (l.bus == bus_id) total += l.demand[static_cast<size_t>(t)];
    peak = std::max(peak, total);
  }
  return peak;
}

Network load_network_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("network document: ") + e.what());
  }
  Network net = parse_network(doc);
  check_or_throw(net);
  return net;
}

Network load_network(const std::string& path_or_name) {
  if (const char* text = bundled_dataset(path_or_name)) return load_network_json(text);
  std::ifstream in(path_or_name);
  if (!in) fail(ErrorKind::Io, "cannot open network file: " + path_or_name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_network_json(buf.str());
}

std::string serialize_network(const Network& net) {
  json doc;
  doc["name"] = net.name;
  doc["horizon"] = net.horizon;
  doc["period_hours"] = net.period_hours;
  doc["buses"] = json::array();
  for (const auto& b : net.buses) doc["buses"].push_back({{"id", b.id}, {"name", b.name}});
  doc["lines"] = json::array();
  for (const auto& l : net.lines)
    doc["lines"].push_back({{"from", l.from_bus},
                            {"to", l.to_bus},
                            {"susceptance_pu", l.susceptance},
                            {"flow_limit_mw", l.flow_limit}});
  doc["generators"] = json::array();
  for (const auto& g : net.generators) {
    json blocks = json::array();
    for (const auto& b : g.blocks) blocks.push_back({{"price", b.price}, {"size", b.size}});
    doc["generators"].push_back({{"id", g.id},
                                 {"bus", g.bus},
                                 {"name", g.name},
                                 {"p_min", g.p_min},
                                 {"p_max", g.p_max},
                                 {"blocks", blocks},
                                 {"startup_cost", g.startup_cost},
                                 {"reserve",
                                  {{"up_max", g.reserve.up_max},
                                   {"dn_max", g.reserve.dn_max},
                                   {"ns_max", g.reserve.ns_max},
                                   {"up_price", g.reserve.up_price},
                                   {"dn_price", g.reserve.dn_price},
                                   {"ns_price", g.reserve.ns_price}}},
                                 {"initial_on", g.initial_on}});
  }
  doc["loads"] = json::array();
  for (const auto& l : net.loads)
    doc["loads"].push_back({{"id", l.id},
                            {"bus", l.bus},
                            {"name", l.name},
                            {"demand", l.demand},
                            {"demand_min", l.demand_min},
                            {"demand_max", l.demand_max},
                            {"utility_bid", l.utility_bid},
                            {"voll", l.voll},
                            {"reserve",
                             {{"up_max", l.reserve.up_max},
                              {"dn_max", l.reserve.dn_max},
                              {"up_price", l.reserve.up_price},
                              {"dn_price", l.reserve.dn_price}}}});
  doc["wind"] = {{"bus", net.wind.bus},
                 {"p_min", net.wind.p_min_offer},
                 {"p_max", net.wind.p_max_offer},
                 {"offer_price", net.wind.offer_price}};
  return doc.dump(2);
}

std::vector<Violation> validate(const Network& net) {
  std::vector<Violation> out;
  auto add = [&out](std::string entity, std::string rule) {
    out.push_back({std::move(entity), std::move(rule)});
  };

  if (net.horizon <= 0) add("network", "horizon must be positive");
  for (size_t t = 0; t < net.period_hours.size(); ++t)
    if (net.period_hours[t] <= 0.0)
      add("network", "period_hours[" + std::to_string(t + 1) + "] must be positive");

  // Bus ids unique and contiguous from 1.
  std::vector<int> ids;
  for (const auto& b : net.buses) ids.push_back(b.id);
  std::sort(ids.begin(), ids.end());
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i > 0 && ids[i] == ids[i - 1])
      add("bus " + std::to_string(ids[i]), "duplicate bus id");
    if (ids[i] != static_cast<int>(i) + 1) {
      add("network", "bus ids must be contiguous starting at 1");
      break;
    }
  }

  for (size_t k = 0; k < net.lines.size(); ++k) {
    const Line& l = net.lines[k];
    const std::string entity =
        "line " + std::to_string(l.from_bus) + "-" + std::to_string(l.to_bus);
    if (l.susceptance <= 0.0) add(entity, "susceptance must be > 0");
    if (l.flow_limit <= 0.0) add(entity, "flow_limit must be > 0");
    if (l.from_bus == l.to_bus) add(entity, "line endpoints must differ");
    if (net.bus_index(l.from_bus) < 0) add(entity, "from-bus does not exist");
    if (net.bus_index(l.to_bus) < 0) add(entity, "to-bus does not exist");
  }

  double top_block_price = 0.0;
  for (const auto& g : net.generators) {
    const std::string entity = "generator " + std::to_string(g.id);
    if (net.bus_index(g.bus) < 0) add(entity, "references nonexistent bus " + std::to_string(g.bus));
    if (g.p_min < 0.0) add(entity, "p_min must be >= 0");
    if (g.p_min > g.p_max) add(entity, "p_min exceeds p_max");
    double block_sum = 0.0;
    for (size_t m = 0; m < g.blocks.size(); ++m) {
      if (g.blocks[m].size < 0.0) add(entity, "block size must be >= 0");
      if (m > 0 && g.blocks[m].price < g.blocks[m - 1].price)
        add(entity, "blocks not in nondecreasing price order");
      block_sum += g.blocks[m].size;
      top_block_price = std::max(top_block_price, g.blocks[m].price);
    }
    if (block_sum + 1e-9 < g.p_max - g.p_min)
      add(entity, "block sizes sum below p_max - p_min");
    if (g.reserve.up_max < 0.0 || g.reserve.dn_max < 0.0 || g.reserve.ns_max < 0.0)
      add(entity, "reserve caps must be >= 0");
  }

  for (const auto& l : net.loads) {
    const std::string entity = "load " + std::to_string(l.id);
    if (net.bus_index(l.bus) < 0) add(entity, "references nonexistent bus " + std::to_string(l.bus));
    for (int t = 0; t < net.horizon; ++t) {
      const auto ut = static_cast<size_t>(t);
      if (l.demand_min[ut] > l.demand_max[ut] + 1e-12)
        add(entity, "demand_min exceeds demand_max at t=" + std::to_string(t + 1));
      if (l.reserve.up_max[ut] < 0.0 || l.reserve.dn_max[ut] < 0.0)
        add(entity, "reserve caps must be >= 0 at t=" + std::to_string(t + 1));
    }
    if (l.voll <= top_block_price)
      add(entity, "voll must exceed every generator block price");
  }

  // Exactly one wind plant, at an existing bus, priced at zero.
  {
    const std::string entity = "wind";
    if (net.bus_index(net.wind.bus) < 0)
      add(entity, "references nonexistent bus " + std::to_string(net.wind.bus));
    if (net.wind.offer_price != 0.0) add(entity, "offer price must be zero");
    for (int t = 0; t < net.horizon; ++t) {
      const auto ut = static_cast<size_t>(t);
      if (net.wind.p_min_offer[ut] > net.wind.p_max_offer[ut] + 1e-12)
        add(entity, "p_min exceeds p_max at t=" + std::to_string(t + 1));
      if (net.wind.p_min_offer[ut] < 0.0)
        add(entity, "p_min must be >= 0 at t=" + std::to_string(t + 1));
    }
  }

  // Line graph connectivity over all buses.
  if (!net.buses.empty()) {
    std::vector<char> seen(net.buses.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      for (const auto& l : net.lines) {
        int fi = net.bus_index(l.from_bus), ti = net.bus_index(l.to_bus);
        if (fi < 0 || ti < 0) continue;
        int other = -1;
        if (fi == b) other = ti;
        if (ti == b) other = fi;
        if (other >= 0 && !seen[static_cast<size_t>(other)]) {
          seen[static_cast<size_t>(other)] = 1;
          stack.push_back(other);
        }
      }
    }
    for (size_t i = 0; i < seen.size(); ++i)
      if (!seen[i] && net.buses.size() > 1)
        add("bus " + std::to_string(net.buses[i].id), "isolated from the line graph");
  }

  return out;
}

IncidenceStructure incidence_and_susceptance(const Network& net) {
  IncidenceStructure s;
  s.by_bus.resize(net.buses.size());
  for (size_t k = 0; k < net.lines.size(); ++k) {
    const Line& l = net.lines[k];
    LineIncidence inc;
    inc.line = static_cast<int>(k);
    inc.from = net.bus_index(l.from_bus);
    inc.to = net.bus_index(l.to_bus);
    inc.susceptance = l.susceptance;
    s.flows.push_back(inc);
    s.by_bus[static_cast<size_t>(inc.from)].lines.emplace_back(static_cast<int>(k), +1);
    s.by_bus[static_cast<size_t>(inc.to)].lines.emplace_back(static_cast<int>(k), -1);
  }
  return s;
}

}  // namespace smce
