#pragma once

// Power network and market participant data: buses, lines, generating units
// with block offers and reserve offers, load points, and the single wind
// plant. Loaded from a JSON document and immutable afterwards.

#include <string>
#include <vector>

namespace smce {

struct Bus {
  int id = 0;  // contiguous 1-based index after loading
  std::string name;
};

struct Line {
  int from_bus = 0;
  int to_bus = 0;
  double susceptance = 0.0;  // per unit on the system MVA base
  double flow_limit = 0.0;   // MW, symmetric
};

struct OfferBlock {
  double price = 0.0;  // $/MWh
  double size = 0.0;   // MW
};

struct ReserveOffer {
  double up_max = 0.0;  // MW
  double dn_max = 0.0;
  double ns_max = 0.0;      // non-spinning; 0 when not offered
  double up_price = 0.0;    // $/MWh of scheduled capacity
  double dn_price = 0.0;
  double ns_price = 0.0;
};

struct GeneratorUnit {
  int id = 0;
  int bus = 0;
  std::string name;
  double p_min = 0.0;
  double p_max = 0.0;
  std::vector<OfferBlock> blocks;  // normalized to nondecreasing price
  double startup_cost = 0.0;       // $ per start
  ReserveOffer reserve;
  bool initial_on = false;  // status before the first period
};

struct LoadReserveOffer {
  std::vector<double> up_max;  // MW per period
  std::vector<double> dn_max;
  double up_price = 0.0;  // $/MWh of scheduled capacity
  double dn_price = 0.0;
};

struct LoadPoint {
  int id = 0;
  int bus = 0;
  std::string name;
  std::vector<double> demand;      // MW per period (bid quantity)
  std::vector<double> demand_min;  // lower bid bound; equals demand when inelastic
  std::vector<double> demand_max;
  double utility_bid = 0.0;  // $/MWh
  double voll = 0.0;         // $/MWh of shed energy
  LoadReserveOffer reserve;
};

struct WindPlant {
  int bus = 0;
  std::vector<double> p_min_offer;  // MW per period
  std::vector<double> p_max_offer;
  double offer_price = 0.0;  // fixed at zero: the plant is not a competitive entity
};

struct Network {
  std::string name;
  int horizon = 0;                ///< number of periods
  std::vector<double> period_hours;
  std::vector<Bus> buses;
  std::vector<Line> lines;
  std::vector<GeneratorUnit> generators;
  std::vector<LoadPoint> loads;
  WindPlant wind;

  int bus_index(int bus_id) const;  // -1 when absent
  double system_peak_demand() const;
  double bus_peak_demand(int bus_id) const;
};

struct Violation {
  std::string entity;  // e.g. "generator 7"
  std::string rule;
};

/// Parses and validates a network document from disk. Accepts the bundled
/// dataset names ("rts24", "tiny2") as well as file paths.
Network load_network(const std::string& path_or_name);

/// Same, from an in-memory JSON text.
Network load_network_json(const std::string& json_text);

/// Serializes back to the document schema. load(serialize(net)) is
/// structurally equal to net.
std::string serialize_network(const Network& net);

/// Structural rule check. Empty result iff every invariant holds.
std::vector<Violation> validate(const Network& net);

/// One line-flow record per line plus per-bus adjacency, ready for the
/// flow-definition and nodal-balance rows.
struct LineIncidence {
  int line = 0;  // index into Network::lines
  int from = 0;  // bus array indices
  int to = 0;
  double susceptance = 0.0;  // coefficient +B on angle(from), -B on angle(to)
};

struct BusAdjacency {
  // (line index, sign): sign +1 when the line leaves this bus (flow counts
  // as outflow), -1 when it arrives.
  std::vector<std::pair<int, int>> lines;
};

struct IncidenceStructure {
  std::vector<LineIncidence> flows;
  std::vector<BusAdjacency> by_bus;  // indexed like Network::buses
};

IncidenceStructure incidence_and_susceptance(const Network& net);

/// Resolves a bundled dataset name to its JSON text, or empty if unknown.
const char* bundled_dataset(const std::string& name);

}  // namespace smce
