#pragma once

// Maximum double-weighted source-sink pairs via a cheapest circulation on a
// three-layer auxiliary network.
//
// The auxiliary network has a source layer V_o, the original layer V and a
// sink layer V_i. For every node v there are the vertical arcs v_i -> v (lower
// bound = sink weight of v) and v -> v_o (lower bound = source weight of v).
// For every arc uv of the bidirected digraph there are u -> v, u -> v_i and
// u_o -> v, each of cost 1 when uv is an original arc and 0 for a reverse
// copy. An optimal potential yields the pair, an optimal flow yields a
// minimum-cost circular cover, and the two values coincide.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sosi/digraph.hpp"
#include "sosi/mcc.hpp"
#include "sosi/rational.hpp"

namespace sosi {

struct WeightPair {
  std::vector<Rational> source;  // rewards a node being a source
  std::vector<Rational> sink;    // rewards a node being a sink

  static WeightPair zero(int n) { return {std::vector<Rational>(n), std::vector<Rational>(n)}; }
  bool integral() const;
};

Rational pair_weight(const WeightPair& w, const NodeSet& sources, const NodeSet& sinks);

enum class AuxArcKind {
  kSinkVertical,    // v_i -> v
  kSourceVertical,  // v -> v_o
  kMiddle,          // u -> v
  kIntoSinkLayer,   // u -> v_i
  kFromSourceLayer  // u_o -> v
};

struct AuxArcOrigin {
  AuxArcKind kind;
  int index;  // node for vertical arcs, bidirected arc otherwise
};

class AuxNetwork {
 public:
  AuxNetwork(const Digraph& d, const WeightPair& integral_weights);

  const BiDigraph& bidigraph() const { return bidigraph_; }
  const mcc::CirculationInstance& instance() const { return instance_; }
  const AuxArcOrigin& origin(ArcId aux_arc) const { return origin_[aux_arc]; }
  int base_nodes() const { return n_; }

  NodeId source_copy(NodeId v) const { return v; }
  NodeId middle(NodeId v) const { return n_ + v; }
  NodeId sink_copy(NodeId v) const { return 2 * n_ + v; }

  ArcId sink_vertical(NodeId v) const { return 2 * v; }
  ArcId source_vertical(NodeId v) const { return 2 * v + 1; }
  ArcId middle_arc(ArcId bi_arc) const { return 2 * n_ + 3 * bi_arc; }
  ArcId into_sink_arc(ArcId bi_arc) const { return 2 * n_ + 3 * bi_arc + 1; }
  ArcId from_source_arc(ArcId bi_arc) const { return 2 * n_ + 3 * bi_arc + 2; }

 private:
  int n_;
  BiDigraph bidigraph_;
  std::vector<AuxArcOrigin> origin_;
  mcc::CirculationInstance instance_;
};

AuxNetwork build_aux(const Digraph& d, const WeightPair& integral_weights);

struct PairExtraction {
  NodeSet sources;
  NodeSet sinks;
  Potential witness;         // restriction to the middle layer, normalized
  std::int64_t dual_value;   // sum of lower bound times slack on vertical arcs
};

PairExtraction extract_pair(const AuxNetwork& aux, const Potential& aux_potential);

// Values per arc of the bidirected digraph.
struct CircularCover {
  std::vector<Rational> out_part;  // out-covers the source weights
  std::vector<Rational> in_part;   // in-covers the sink weights
  Rational cost;
};

CircularCover extract_cover(const AuxNetwork& aux, std::span<const std::int64_t> aux_flow);

bool is_circular_cover(const BiDigraph& b, const WeightPair& w, const CircularCover& cover);

struct CertificateChecks {
  bool solver_optimal = false;
  bool minmax_equal = false;
  bool pair_verified = false;
  bool witness_small_dropping = false;
  bool vertical_sums_binary = false;
  bool cover_valid = false;
  bool cover_integral = false;  // only required when the weights are integral

  bool all(bool integral_regime) const {
    return solver_optimal && minmax_equal && pair_verified && witness_small_dropping &&
           vertical_sums_binary && cover_valid && (cover_integral || !integral_regime);
  }
};

struct SoSiCertificate {
  NodeSet sources;
  NodeSet sinks;
  Potential witness;
  CircularCover cover;
  Rational value;
  Rational objective;
  CertificateChecks checks;
};

// Throws InvariantError if any self-check fails.
SoSiCertificate max_so_si(const Digraph& d, const WeightPair& w);

struct SinkStableResult {
  NodeSet set;
  std::vector<mcc::WeightedCircuit> circuits;  // arcs of the bidirected digraph
  std::int64_t value = 0;
  SoSiCertificate certificate;
};

std::int64_t a_value(const BiDigraph& b, const mcc::WeightedCircuit& c);

SinkStableResult sink_stable_max(const Digraph& d, std::span<const Rational> w);

SoSiCertificate resonant_max(const Digraph& d, std::span<const Rational> w);

SoSiCertificate cardinality_within(const Digraph& d, const NodeSet& allowed_sources,
                                   const NodeSet& allowed_sinks);

struct ConstrainedResult {
  bool feasible = false;
  SoSiCertificate certificate;  // under the boosted weights
};

ConstrainedResult constrained_so_si(const Digraph& d, const NodeSet& forced_sources,
                                    const NodeSet& allowed_sources, const NodeSet& forced_sinks,
                                    const NodeSet& allowed_sinks);

}  // namespace sosi
