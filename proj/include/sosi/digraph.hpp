#pragma once

// Directed multigraphs, their bidirection, potentials and tensions, and the
// feasibility machinery used to certify dicut-equivalent reorientations and
// source-sink pairs.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sosi/errors.hpp"
#include "sosi/rational.hpp"

namespace sosi {

using NodeId = int;
using ArcId = int;

// Sorted list of distinct node ids.
using NodeSet = std::vector<NodeId>;

// Integer label per node. The drop of arc uv is pi[v] - pi[u].
using Potential = std::vector<std::int64_t>;

// One side of a tension interval; nullopt means -inf (lower) or +inf (upper).
using Bound = std::optional<std::int64_t>;

struct Arc {
  NodeId tail;
  NodeId head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Loopless, weakly connected multidigraph on nodes 0..n-1 with n >= 2.
// Arcs are identified by their position; parallel arcs stay distinct.
class Digraph {
 public:
  Digraph(int node_count, std::vector<Arc> arcs);

  int node_count() const { return node_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(ArcId a) const { return arcs_[a]; }
  std::span<const Arc> arcs() const { return arcs_; }

  std::span<const ArcId> out_arcs(NodeId v) const {
    return {out_.data() + out_begin_[v], out_.data() + out_begin_[v + 1]};
  }
  std::span<const ArcId> in_arcs(NodeId v) const {
    return {in_.data() + in_begin_[v], in_.data() + in_begin_[v + 1]};
  }

 private:
  int node_count_;
  std::vector<Arc> arcs_;
  std::vector<int> out_begin_, in_begin_;
  std::vector<ArcId> out_, in_;
};

// The digraph with every arc doubled by its reverse. Arc i < m is the original
// arc i of the base digraph, arc i + m is its reverse. Cost is 1 on originals
// and 0 on reverses.
class BiDigraph {
 public:
  explicit BiDigraph(Digraph base);

  const Digraph& base() const { return base_; }
  const Digraph& graph() const { return graph_; }
  int node_count() const { return graph_.node_count(); }
  int arc_count() const { return graph_.arc_count(); }
  int original_count() const { return base_.arc_count(); }
  const Arc& arc(ArcId a) const { return graph_.arc(a); }

  bool is_original(ArcId a) const { return a < original_count(); }
  ArcId reverse(ArcId a) const {
    return is_original(a) ? a + original_count() : a - original_count();
  }
  // Index of the base arc this arc was generated from.
  ArcId origin(ArcId a) const { return is_original(a) ? a : a - original_count(); }
  int cost(ArcId a) const { return is_original(a) ? 1 : 0; }

 private:
  Digraph base_;
  Digraph graph_;
};

BiDigraph bidirect(const Digraph& d);

std::int64_t drop(const Digraph& d, const Potential& pi, ArcId a);

bool is_small_dropping(const Digraph& d, const Potential& pi);

// Shift so that the minimum label is 0.
void normalize(Potential& pi);

// A circuit of the underlying undirected graph, listed as a closed walk.
// `forward` means the walk traverses the arc from tail to head.
struct CircuitStep {
  ArcId arc;
  bool forward;
};

struct Circuit {
  std::vector<CircuitStep> steps;
};

// Either a potential whose drops respect the bounds or a circuit on which the
// lower bounds of the backward-traversed arcs exceed the upper bounds of the
// forward-traversed arcs.
struct TensionResult {
  bool feasible = false;
  Potential potential;
  Circuit violation;
};

TensionResult feasible_tension(const Digraph& d, std::span<const Bound> lower,
                               std::span<const Bound> upper);

// Sum of lower bounds on backward steps minus sum of upper bounds on forward
// steps. Positive exactly when the circuit certifies infeasibility. Unbounded
// entries make the excess -inf, reported as nullopt.
std::optional<std::int64_t> circuit_excess(const Digraph& d, const Circuit& c,
                                           std::span<const Bound> lower,
                                           std::span<const Bound> upper);

// Can every arc of `reverse` be flipped while every arc of `keep` stays, by
// reversing disjoint dicuts? Witness drops are 1 on `reverse`, 0 on `keep`,
// 0 or 1 elsewhere.
TensionResult verify_reorientable(const Digraph& d, std::span<const ArcId> reverse,
                                  std::span<const ArcId> keep);

enum class ArcClass { kNeutral, kCorrect, kIncorrect };

// Incorrect: enters Y_o or leaves Y_i. Correct: leaves Y_o or enters Y_i.
std::vector<ArcClass> classify_arcs(const Digraph& d, const NodeSet& sources,
                                    const NodeSet& sinks);

TensionResult verify_so_si(const Digraph& d, const NodeSet& sources, const NodeSet& sinks);

// Direct check that `pi` is small-dropping and has drop 1 on incorrect arcs and
// 0 on correct arcs for the given pair.
bool is_so_si_witness(const Digraph& d, const NodeSet& sources, const NodeSet& sinks,
                      const Potential& pi);

// Reverses the arcs with drop 1. Arc ids are preserved.
Digraph apply_reorientation(const Digraph& d, const Potential& pi);

std::pair<NodeSet, NodeSet> sources_sinks(const Digraph& d);

// Checks are exact. Values must be nonnegative.
template <typename T>
bool is_circulation(const BiDigraph& b, std::span<const T> z) {
  if (static_cast<int>(z.size()) != b.arc_count()) {
    throw InputError("circulation has wrong length");
  }
  std::vector<T> balance(b.node_count(), T(0));
  for (ArcId a = 0; a < b.arc_count(); ++a) {
    if (z[a] < T(0)) throw InputError("circulation has a negative entry");
    balance[b.arc(a).head] += z[a];
    balance[b.arc(a).tail] -= z[a];
  }
  for (const T& x : balance) {
    if (x != T(0)) return false;
  }
  return true;
}

template <typename T>
T circulation_cost(const BiDigraph& b, std::span<const T> z) {
  if (static_cast<int>(z.size()) != b.arc_count()) {
    throw InputError("circulation has wrong length");
  }
  T total(0);
  for (ArcId a = 0; a < b.arc_count(); ++a) {
    if (z[a] < T(0)) throw InputError("circulation has a negative entry");
    if (b.is_original(a)) total += z[a];
  }
  return total;
}

// Membership mask for a node set; throws on out-of-range or repeated ids.
std::vector<char> node_mask(int node_count, const NodeSet& set, const char* what);

NodeSet make_node_set(std::vector<NodeId> nodes);

}  // namespace sosi
