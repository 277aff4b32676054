#include "sosi/digraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace sosi {

namespace {

void build_csr(int n, std::span<const Arc> arcs, bool by_tail, std::vector<int>& begin,
               std::vector<ArcId>& list) {
  begin.assign(n + 1, 0);
  for (const Arc& a : arcs) ++begin[(by_tail ? a.tail : a.head) + 1];
  std::partial_sum(begin.begin(), begin.end(), begin.begin());
  list.resize(arcs.size());
  std::vector<int> fill(begin.begin(), begin.end() - 1);
  for (ArcId i = 0; i < static_cast<ArcId>(arcs.size()); ++i) {
    list[fill[by_tail ? arcs[i].tail : arcs[i].head]++] = i;
  }
}

}  // namespace

Digraph::Digraph(int node_count, std::vector<Arc> arcs)
    : node_count_(node_count), arcs_(std::move(arcs)) {
  if (node_count_ < 2) throw InputError("digraph needs at least 2 nodes");
  for (const Arc& a : arcs_) {
    if (a.tail < 0 || a.tail >= node_count_ || a.head < 0 || a.head >= node_count_) {
      throw InputError("arc endpoint out of range");
    }
    if (a.tail == a.head) throw InputError("digraph has a loop");
  }
  build_csr(node_count_, arcs_, true, out_begin_, out_);
  build_csr(node_count_, arcs_, false, in_begin_, in_);

  // Weak connectivity.
  std::vector<char> seen(node_count_, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    auto visit = [&](NodeId u) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    };
    for (ArcId a : out_arcs(v)) visit(arcs_[a].head);
    for (ArcId a : in_arcs(v)) visit(arcs_[a].tail);
  }
  if (reached != node_count_) throw InputError("digraph is not weakly connected");
}

namespace {

Digraph doubled(const Digraph& base) {
  std::vector<Arc> arcs(base.arcs().begin(), base.arcs().end());
  for (const Arc& a : base.arcs()) arcs.push_back({a.head, a.tail});
  return Digraph(base.node_count(), std::move(arcs));
}

}  // namespace

BiDigraph::BiDigraph(Digraph base) : base_(std::move(base)), graph_(doubled(base_)) {}

BiDigraph bidirect(const Digraph& d) { return BiDigraph(d); }

std::int64_t drop(const Digraph& d, const Potential& pi, ArcId a) {
  return pi[d.arc(a).head] - pi[d.arc(a).tail];
}

bool is_small_dropping(const Digraph& d, const Potential& pi) {
  if (static_cast<int>(pi.size()) != d.node_count()) return false;
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    const std::int64_t x = drop(d, pi, a);
    if (x != 0 && x != 1) return false;
  }
  return true;
}

void normalize(Potential& pi) {
  if (pi.empty()) return;
  const std::int64_t lo = *std::min_element(pi.begin(), pi.end());
  for (auto& x : pi) x -= lo;
}

std::vector<char> node_mask(int node_count, const NodeSet& set, const char* what) {
  std::vector<char> mask(node_count, 0);
  for (NodeId v : set) {
    if (v < 0 || v >= node_count) throw InputError(std::string(what) + ": node out of range");
    if (mask[v]) throw InputError(std::string(what) + ": repeated node");
    mask[v] = 1;
  }
  return mask;
}

NodeSet make_node_set(std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

// ---------------------------------------------------------------------------
// Difference constraints.
//
// lo <= pi[h] - pi[t] <= hi becomes the edges t -> h (weight hi) and
// h -> t (weight -lo). Shortest distances from an implicit source joined to
// every node with weight 0 form a feasible potential; a negative cycle is a
// circuit whose backward lower bounds exceed its forward upper bounds.

namespace {

struct ConstraintEdge {
  NodeId from;
  NodeId to;
  std::int64_t weight;
  ArcId arc;
  bool forward;
};

class DifferenceSystem {
 public:
  DifferenceSystem(const Digraph& d, std::span<const Bound> lower, std::span<const Bound> upper)
      : n_(d.node_count()) {
    for (ArcId a = 0; a < d.arc_count(); ++a) {
      const Arc& arc = d.arc(a);
      if (upper[a]) edges_.push_back({arc.tail, arc.head, *upper[a], a, true});
      if (lower[a]) edges_.push_back({arc.head, arc.tail, -*lower[a], a, false});
    }
    begin_.assign(n_ + 1, 0);
    for (const auto& e : edges_) ++begin_[e.from + 1];
    std::partial_sum(begin_.begin(), begin_.end(), begin_.begin());
    adj_.resize(edges_.size());
    std::vector<int> fill(begin_.begin(), begin_.end() - 1);
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) adj_[fill[edges_[i].from]++] = i;
  }

  TensionResult solve() {
    dist_.assign(n_, 0);
    pred_.assign(n_, -1);
    std::vector<int> length(n_, 0);
    std::vector<char> queued(n_, 1);
    std::deque<NodeId> queue(n_);
    std::iota(queue.begin(), queue.end(), 0);

    // Label-correcting search. The relaxation budget n*m bounds the work; past
    // it, a textbook Bellman-Ford pass extracts the cycle.
    const std::int64_t budget =
        static_cast<std::int64_t>(n_) * std::max<std::int64_t>(1, edges_.size()) + n_;
    std::int64_t relaxations = 0;
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      queued[u] = 0;
      for (int k = begin_[u]; k < begin_[u + 1]; ++k) {
        const ConstraintEdge& e = edges_[adj_[k]];
        if (dist_[u] + e.weight >= dist_[e.to]) continue;
        dist_[e.to] = dist_[u] + e.weight;
        pred_[e.to] = adj_[k];
        length[e.to] = length[u] + 1;
        if (length[e.to] >= n_) {
          if (auto cycle = predecessor_cycle(e.to)) return infeasible(std::move(*cycle));
        }
        if (++relaxations > budget) return infeasible(bellman_ford_cycle());
        if (!queued[e.to]) {
          queued[e.to] = 1;
          queue.push_back(e.to);
        }
      }
    }
    TensionResult result;
    result.feasible = true;
    result.potential = dist_;
    normalize(result.potential);
    return result;
  }

 private:
  TensionResult infeasible(std::vector<int> cycle_edges) {
    TensionResult result;
    result.feasible = false;
    for (int idx : cycle_edges) result.violation.steps.push_back({edges_[idx].arc, edges_[idx].forward});
    return result;
  }

  // Cycle in the predecessor graph reachable from v, in traversal order.
  std::optional<std::vector<int>> predecessor_cycle(NodeId v) {
    std::vector<int> mark(n_, 0);
    NodeId x = v;
    while (pred_[x] != -1 && !mark[x]) {
      mark[x] = 1;
      x = edges_[pred_[x]].from;
    }
    if (pred_[x] == -1) return std::nullopt;
    std::vector<int> cycle;
    NodeId y = x;
    do {
      cycle.push_back(pred_[y]);
      y = edges_[pred_[y]].from;
    } while (y != x);
    std::reverse(cycle.begin(), cycle.end());
    std::int64_t total = 0;
    for (int idx : cycle) total += edges_[idx].weight;
    if (total >= 0) throw InvariantError("predecessor cycle is not negative");
    return cycle;
  }

  std::vector<int> bellman_ford_cycle() {
    std::vector<std::int64_t> dist(n_, 0);
    std::vector<int> pred(n_, -1);
    NodeId last = -1;
    for (int round = 0; round < n_; ++round) {
      last = -1;
      for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        const auto& e = edges_[i];
        if (dist[e.from] + e.weight < dist[e.to]) {
          dist[e.to] = dist[e.from] + e.weight;
          pred[e.to] = i;
          last = e.to;
        }
      }
      if (last == -1) throw InvariantError("relaxation budget exceeded without a negative cycle");
    }
    for (int i = 0; i < n_; ++i) last = edges_[pred[last]].from;
    pred_ = pred;
    auto cycle = predecessor_cycle(last);
    if (!cycle) throw InvariantError("Bellman-Ford failed to expose a negative cycle");
    return *cycle;
  }

  int n_;
  std::vector<ConstraintEdge> edges_;
  std::vector<int> begin_;
  std::vector<int> adj_;
  std::vector<std::int64_t> dist_;
  std::vector<int> pred_;
};

}  // namespace

TensionResult feasible_tension(const Digraph& d, std::span<const Bound> lower,
                               std::span<const Bound> upper) {
  if (static_cast<int>(lower.size()) != d.arc_count() ||
      static_cast<int>(upper.size()) != d.arc_count()) {
    throw InputError("bound vectors must have one entry per arc");
  }
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    if (lower[a] && upper[a] && *lower[a] > *upper[a]) {
      throw InputError("lower bound exceeds upper bound on arc " + std::to_string(a));
    }
  }
  return DifferenceSystem(d, lower, upper).solve();
}

std::optional<std::int64_t> circuit_excess(const Digraph& d, const Circuit& c,
                                           std::span<const Bound> lower,
                                           std::span<const Bound> upper) {
  (void)d;
  std::int64_t total = 0;
  for (const CircuitStep& s : c.steps) {
    if (s.forward) {
      if (!upper[s.arc]) return std::nullopt;
      total -= *upper[s.arc];
    } else {
      if (!lower[s.arc]) return std::nullopt;
      total += *lower[s.arc];
    }
  }
  return total;
}

TensionResult verify_reorientable(const Digraph& d, std::span<const ArcId> reverse,
                                  std::span<const ArcId> keep) {
  std::vector<Bound> lower(d.arc_count(), 0);
  std::vector<Bound> upper(d.arc_count(), 1);
  std::vector<char> seen(d.arc_count(), 0);
  auto pin = [&](ArcId a, std::int64_t value) {
    if (a < 0 || a >= d.arc_count()) throw InputError("arc id out of range");
    if (seen[a]) throw InputError("arc " + std::to_string(a) + " listed twice in R and F");
    seen[a] = 1;
    lower[a] = upper[a] = value;
  };
  for (ArcId a : reverse) pin(a, 1);
  for (ArcId a : keep) pin(a, 0);
  return feasible_tension(d, lower, upper);
}

std::vector<ArcClass> classify_arcs(const Digraph& d, const NodeSet& sources,
                                    const NodeSet& sinks) {
  const auto in_o = node_mask(d.node_count(), sources, "Y_o");
  const auto in_i = node_mask(d.node_count(), sinks, "Y_i");
  for (NodeId v = 0; v < d.node_count(); ++v) {
    if (in_o[v] && in_i[v]) throw InputError("Y_o and Y_i overlap");
  }
  std::vector<ArcClass> cls(d.arc_count(), ArcClass::kNeutral);
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    const Arc& arc = d.arc(a);
    if (in_o[arc.head] || in_i[arc.tail]) {
      cls[a] = ArcClass::kIncorrect;
    } else if (in_o[arc.tail] || in_i[arc.head]) {
      cls[a] = ArcClass::kCorrect;
    }
  }
  return cls;
}

TensionResult verify_so_si(const Digraph& d, const NodeSet& sources, const NodeSet& sinks) {
  const auto cls = classify_arcs(d, sources, sinks);
  std::vector<ArcId> reverse, keep;
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    if (cls[a] == ArcClass::kIncorrect) reverse.push_back(a);
    if (cls[a] == ArcClass::kCorrect) keep.push_back(a);
  }
  return verify_reorientable(d, reverse, keep);
}

bool is_so_si_witness(const Digraph& d, const NodeSet& sources, const NodeSet& sinks,
                      const Potential& pi) {
  if (!is_small_dropping(d, pi)) return false;
  const auto cls = classify_arcs(d, sources, sinks);
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    if (cls[a] == ArcClass::kIncorrect && drop(d, pi, a) != 1) return false;
    if (cls[a] == ArcClass::kCorrect && drop(d, pi, a) != 0) return false;
  }
  return true;
}

Digraph apply_reorientation(const Digraph& d, const Potential& pi) {
  if (static_cast<int>(pi.size()) != d.node_count() || !is_small_dropping(d, pi)) {
    throw InputError("reorientation potential is not small-dropping");
  }
  std::vector<Arc> arcs(d.arcs().begin(), d.arcs().end());
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    if (drop(d, pi, a) == 1) std::swap(arcs[a].tail, arcs[a].head);
  }
  return Digraph(d.node_count(), std::move(arcs));
}

std::pair<NodeSet, NodeSet> sources_sinks(const Digraph& d) {
  NodeSet sources, sinks;
  for (NodeId v = 0; v < d.node_count(); ++v) {
    if (d.in_arcs(v).empty()) sources.push_back(v);
    if (d.out_arcs(v).empty()) sinks.push_back(v);
  }
  return {sources, sinks};
}

}  // namespace sosi
