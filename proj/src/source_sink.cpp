#include "sosi/source_sink.hpp"

#include <algorithm>
#include <string>

namespace sosi {

bool WeightPair::integral() const {
  auto ok = [](const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return is_integral(r); });
  };
  return ok(source) && ok(sink);
}

Rational pair_weight(const WeightPair& w, const NodeSet& sources, const NodeSet& sinks) {
  Rational total(0);
  for (NodeId v : sources) total += w.source[v];
  for (NodeId v : sinks) total += w.sink[v];
  return total;
}

namespace {

void check_weights(const Digraph& d, const WeightPair& w) {
  const auto n = static_cast<std::size_t>(d.node_count());
  if (w.source.size() != n || w.sink.size() != n) {
    throw InputError("weight vectors must have one entry per node");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (w.source[v] < 0 || w.sink[v] < 0) throw InputError("weights must be nonnegative");
  }
}

mcc::CirculationInstance make_instance(const BiDigraph& b, const WeightPair& w,
                                       std::vector<AuxArcOrigin>& origin) {
  const int n = b.node_count();
  std::vector<Arc> arcs;
  std::vector<std::int64_t> lower, cost;
  arcs.reserve(2 * n + 3 * b.arc_count());
  for (NodeId v = 0; v < n; ++v) {
    arcs.push_back({2 * n + v, n + v});
    lower.push_back(w.sink[v].numerator());
    cost.push_back(0);
    origin.push_back({AuxArcKind::kSinkVertical, v});
    arcs.push_back({n + v, v});
    lower.push_back(w.source[v].numerator());
    cost.push_back(0);
    origin.push_back({AuxArcKind::kSourceVertical, v});
  }
  for (ArcId k = 0; k < b.arc_count(); ++k) {
    const Arc& uv = b.arc(k);
    const std::int64_t c = b.cost(k);
    arcs.push_back({n + uv.tail, n + uv.head});
    origin.push_back({AuxArcKind::kMiddle, k});
    arcs.push_back({n + uv.tail, 2 * n + uv.head});
    origin.push_back({AuxArcKind::kIntoSinkLayer, k});
    arcs.push_back({uv.tail, n + uv.head});
    origin.push_back({AuxArcKind::kFromSourceLayer, k});
    for (int i = 0; i < 3; ++i) {
      lower.push_back(0);
      cost.push_back(c);
    }
  }
  return {Digraph(3 * n, std::move(arcs)), std::move(lower), std::move(cost)};
}

const WeightPair& integral_weights(const Digraph& d, const WeightPair& w) {
  check_weights(d, w);
  if (!w.integral()) throw InputError("auxiliary network needs integral weights");
  return w;
}

}  // namespace

AuxNetwork::AuxNetwork(const Digraph& d, const WeightPair& w)
    : n_(d.node_count()),
      bidigraph_(d),
      origin_(),
      instance_(make_instance(bidigraph_, integral_weights(d, w), origin_)) {}

AuxNetwork build_aux(const Digraph& d, const WeightPair& integral_weights) {
  return AuxNetwork(d, integral_weights);
}

PairExtraction extract_pair(const AuxNetwork& aux, const Potential& pi) {
  const Digraph& ds = aux.instance().digraph;
  if (static_cast<int>(pi.size()) != ds.node_count()) {
    throw InputError("potential has wrong length");
  }
  for (ArcId a = 0; a < ds.arc_count(); ++a) {
    if (drop(ds, pi, a) > aux.instance().cost[a]) {
      throw InputError("potential violates the cost bound on auxiliary arc " + std::to_string(a));
    }
  }
  const int n = aux.base_nodes();
  PairExtraction out;
  out.dual_value = 0;
  for (NodeId v = 0; v < n; ++v) {
    const std::int64_t sink_slack = pi[aux.sink_copy(v)] - pi[aux.middle(v)];
    const std::int64_t source_slack = pi[aux.middle(v)] - pi[aux.source_copy(v)];
    const std::int64_t vertical = sink_slack + source_slack;
    if (vertical != 0 && vertical != 1) {
      throw InvariantError("vertical slack sum " + std::to_string(vertical) + " at node " +
                           std::to_string(v));
    }
    if (source_slack == 1) out.sources.push_back(v);
    if (sink_slack == 1) out.sinks.push_back(v);
    out.dual_value += aux.instance().lower[aux.sink_vertical(v)] * sink_slack +
                      aux.instance().lower[aux.source_vertical(v)] * source_slack;
  }
  out.witness.assign(pi.begin() + n, pi.begin() + 2 * n);
  normalize(out.witness);
  if (!is_small_dropping(aux.bidigraph().base(), out.witness)) {
    throw InvariantError("extracted potential is not small-dropping");
  }
  return out;
}

CircularCover extract_cover(const AuxNetwork& aux, std::span<const std::int64_t> flow) {
  const auto& inst = aux.instance();
  const Digraph& ds = inst.digraph;
  if (static_cast<int>(flow.size()) != ds.arc_count()) throw InputError("flow has wrong length");
  std::vector<std::int64_t> z(flow.begin(), flow.end());
  std::vector<std::int64_t> balance(ds.node_count(), 0);
  for (ArcId a = 0; a < ds.arc_count(); ++a) {
    if (z[a] < inst.lower[a]) throw InputError("flow violates a lower bound");
    balance[ds.arc(a).head] += z[a];
    balance[ds.arc(a).tail] -= z[a];
  }
  if (std::any_of(balance.begin(), balance.end(), [](std::int64_t x) { return x != 0; })) {
    throw InputError("flow is not a circulation");
  }

  const BiDigraph& b = aux.bidigraph();
  // Move middle-layer flow u -> v onto the detour u -> v_i -> v; same cost.
  for (ArcId k = 0; k < b.arc_count(); ++k) {
    const std::int64_t alpha = z[aux.middle_arc(k)];
    if (alpha == 0) continue;
    z[aux.middle_arc(k)] = 0;
    z[aux.into_sink_arc(k)] += alpha;
    z[aux.sink_vertical(b.arc(k).head)] += alpha;
  }
  CircularCover cover;
  cover.out_part.resize(b.arc_count());
  cover.in_part.resize(b.arc_count());
  cover.cost = 0;
  for (ArcId k = 0; k < b.arc_count(); ++k) {
    cover.out_part[k] = z[aux.from_source_arc(k)];
    cover.in_part[k] = z[aux.into_sink_arc(k)];
    if (b.is_original(k)) cover.cost += cover.out_part[k] + cover.in_part[k];
  }
  return cover;
}

bool is_circular_cover(const BiDigraph& b, const WeightPair& w, const CircularCover& cover) {
  const int n = b.node_count();
  if (static_cast<int>(cover.out_part.size()) != b.arc_count() ||
      static_cast<int>(cover.in_part.size()) != b.arc_count()) {
    return false;
  }
  std::vector<Rational> out_deg(n), in_deg(n), balance(n);
  Rational cost(0);
  for (ArcId k = 0; k < b.arc_count(); ++k) {
    const Rational& zo = cover.out_part[k];
    const Rational& zi = cover.in_part[k];
    if (zo < 0 || zi < 0) return false;
    out_deg[b.arc(k).tail] += zo;
    in_deg[b.arc(k).head] += zi;
    balance[b.arc(k).head] += zo + zi;
    balance[b.arc(k).tail] -= zo + zi;
    if (b.is_original(k)) cost += zo + zi;
  }
  for (NodeId v = 0; v < n; ++v) {
    if (out_deg[v] < w.source[v] || in_deg[v] < w.sink[v] || balance[v] != 0) return false;
  }
  return cost == cover.cost;
}

SoSiCertificate max_so_si(const Digraph& d, const WeightPair& w) {
  check_weights(d, w);
  std::vector<Rational> all(w.source);
  all.insert(all.end(), w.sink.begin(), w.sink.end());
  const std::int64_t scale = common_denominator(all);
  WeightPair scaled = w;
  for (auto& x : scaled.source) x *= scale;
  for (auto& x : scaled.sink) x *= scale;

  const AuxNetwork aux(d, scaled);
  const mcc::McfSolution sol = mcc::solve(aux.instance());

  SoSiCertificate cert;
  CertificateChecks& checks = cert.checks;
  checks.solver_optimal = mcc::is_optimal(aux.instance(), sol);

  // extract_pair throws InvariantError if either structural claim fails.
  const PairExtraction pair = extract_pair(aux, sol.potential);
  checks.vertical_sums_binary = true;
  checks.witness_small_dropping = true;
  cert.sources = pair.sources;
  cert.sinks = pair.sinks;
  cert.witness = pair.witness;

  cert.cover = extract_cover(aux, sol.flow);
  checks.cover_integral = true;
  for (ArcId k = 0; k < aux.bidigraph().arc_count(); ++k) {
    cert.cover.out_part[k] /= scale;
    cert.cover.in_part[k] /= scale;
    checks.cover_integral = checks.cover_integral && is_integral(cert.cover.out_part[k]) &&
                            is_integral(cert.cover.in_part[k]);
  }
  cert.cover.cost /= scale;
  checks.cover_valid = is_circular_cover(aux.bidigraph(), w, cert.cover);

  cert.value = pair_weight(w, cert.sources, cert.sinks);
  cert.objective = Rational(sol.objective, scale);
  checks.minmax_equal = cert.value == Rational(pair.dual_value, scale) &&
                        cert.value == cert.cover.cost && cert.value == cert.objective;
  checks.pair_verified = is_so_si_witness(d, cert.sources, cert.sinks, cert.witness) &&
                         verify_so_si(d, cert.sources, cert.sinks).feasible;

  if (!checks.all(w.integral())) {
    throw InvariantError("source-sink certificate failed its self-checks");
  }
  return cert;
}

std::int64_t a_value(const BiDigraph& b, const mcc::WeightedCircuit& c) {
  std::int64_t count = 0;
  for (ArcId a : c.arcs) count += b.is_original(a) ? 1 : 0;
  return count;
}

SinkStableResult sink_stable_max(const Digraph& d, std::span<const Rational> w) {
  for (const Rational& x : w) {
    if (!is_integral(x)) throw InputError("sink-stable weights must be integers");
  }
  WeightPair pair = WeightPair::zero(d.node_count());
  if (w.size() != pair.sink.size()) throw InputError("weight vector must have one entry per node");
  pair.sink.assign(w.begin(), w.end());

  SinkStableResult out;
  out.certificate = max_so_si(d, pair);
  out.set = out.certificate.sinks;
  out.value = out.certificate.value.numerator();

  const BiDigraph b(d);
  std::vector<std::int64_t> z(b.arc_count());
  for (ArcId k = 0; k < b.arc_count(); ++k) {
    z[k] = (out.certificate.cover.out_part[k] + out.certificate.cover.in_part[k]).numerator();
  }
  out.circuits = mcc::decompose(b, z);

  std::int64_t total = 0;
  std::vector<std::int64_t> hits(d.node_count(), 0);
  for (const auto& c : out.circuits) {
    total += c.multiplicity * a_value(b, c);
    for (ArcId a : c.arcs) hits[b.arc(a).head] += c.multiplicity;
  }
  if (total != out.value) throw InvariantError("circuit family A-value differs from optimum");
  for (NodeId v = 0; v < d.node_count(); ++v) {
    if (hits[v] < w[v].numerator()) throw InvariantError("circuit family does not cover w");
  }
  return out;
}

SoSiCertificate resonant_max(const Digraph& d, std::span<const Rational> w) {
  if (static_cast<int>(w.size()) != d.node_count()) {
    throw InputError("weight vector must have one entry per node");
  }
  WeightPair pair{{w.begin(), w.end()}, {w.begin(), w.end()}};
  return max_so_si(d, pair);
}

SoSiCertificate cardinality_within(const Digraph& d, const NodeSet& allowed_sources,
                                   const NodeSet& allowed_sinks) {
  const auto in_o = node_mask(d.node_count(), allowed_sources, "U_o");
  const auto in_i = node_mask(d.node_count(), allowed_sinks, "U_i");
  WeightPair w = WeightPair::zero(d.node_count());
  for (NodeId v = 0; v < d.node_count(); ++v) {
    if (in_o[v] && in_i[v]) throw InputError("U_o and U_i overlap");
    w.source[v] = in_o[v];
    w.sink[v] = in_i[v];
  }
  return max_so_si(d, w);
}

ConstrainedResult constrained_so_si(const Digraph& d, const NodeSet& forced_sources,
                                    const NodeSet& allowed_sources, const NodeSet& forced_sinks,
                                    const NodeSet& allowed_sinks) {
  const int n = d.node_count();
  const auto fo = node_mask(n, forced_sources, "forced sources");
  const auto ao = node_mask(n, allowed_sources, "allowed sources");
  const auto fi = node_mask(n, forced_sinks, "forced sinks");
  const auto ai = node_mask(n, allowed_sinks, "allowed sinks");
  for (NodeId v = 0; v < n; ++v) {
    if ((fo[v] && !ao[v]) || (fi[v] && !ai[v])) {
      throw InputError("forced nodes must be allowed");
    }
    if (ao[v] && ai[v]) throw InputError("allowed source and sink sets overlap");
  }
  // Any forced node outweighs every optional node combined.
  const Rational heavy(1 + static_cast<std::int64_t>(allowed_sources.size() + allowed_sinks.size()));
  WeightPair w = WeightPair::zero(n);
  for (NodeId v = 0; v < n; ++v) {
    w.source[v] = fo[v] ? heavy : Rational(ao[v]);
    w.sink[v] = fi[v] ? heavy : Rational(ai[v]);
  }
  ConstrainedResult out;
  out.certificate = max_so_si(d, w);
  const auto yo = node_mask(n, out.certificate.sources, "Y_o");
  const auto yi = node_mask(n, out.certificate.sinks, "Y_i");
  out.feasible = true;
  for (NodeId v = 0; v < n; ++v) {
    if ((fo[v] && !yo[v]) || (fi[v] && !yi[v])) out.feasible = false;
  }
  return out;
}

}  // namespace sosi
