#include "sosi/mcc.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace sosi::mcc {

namespace {

// Primal-dual min-cost flow on the lower-bound-shifted problem x = lower + x'.
// Every arc keeps an uncapacitated forward residual; the backward residual of
// arc a has capacity x'[a]. Each phase runs Dijkstra under reduced costs,
// lifts the potential, then saturates the zero-reduced-cost subnetwork with a
// Dinic-style max flow from surplus to deficit nodes.
class PrimalDual {
 public:
  explicit PrimalDual(const CirculationInstance& inst)
      : inst_(inst),
        d_(inst.digraph),
        n_(d_.node_count()),
        extra_(d_.arc_count(), 0),
        balance_(n_, 0),
        price_(n_, 0) {
    for (ArcId a = 0; a < d_.arc_count(); ++a) {
      balance_[d_.arc(a).head] += inst.lower[a];
      balance_[d_.arc(a).tail] -= inst.lower[a];
    }
    // balance_ > 0: surplus that must leave; < 0: deficit.
  }

  McfSolution run() {
    while (has_surplus()) {
      const std::int64_t reach = shortest_paths();
      if (reach < 0) fail();
      for (NodeId v = 0; v < n_; ++v) price_[v] += dist_[v] == kUnreached ? reach : std::min(dist_[v], reach);
      max_flow_on_tight_arcs();
    }
    McfSolution sol;
    sol.flow.resize(d_.arc_count());
    for (ArcId a = 0; a < d_.arc_count(); ++a) {
      sol.flow[a] = inst_.lower[a] + extra_[a];
      sol.objective += inst_.cost[a] * sol.flow[a];
    }
    sol.potential = price_;
    normalize(sol.potential);
    return sol;
  }

 private:
  static constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();

  bool has_surplus() const {
    return std::any_of(balance_.begin(), balance_.end(), [](std::int64_t b) { return b > 0; });
  }

  std::int64_t reduced_forward(ArcId a) const {
    return inst_.cost[a] + price_[d_.arc(a).tail] - price_[d_.arc(a).head];
  }
  std::int64_t reduced_backward(ArcId a) const { return -reduced_forward(a); }

  // Distances from all surplus nodes; returns the distance of the nearest
  // deficit node or -1 when none is reachable.
  std::int64_t shortest_paths() {
    dist_.assign(n_, kUnreached);
    using Item = std::pair<std::int64_t, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (NodeId v = 0; v < n_; ++v) {
      if (balance_[v] > 0) {
        dist_[v] = 0;
        heap.push({0, v});
      }
    }
    std::int64_t nearest = -1;
    while (!heap.empty()) {
      const auto [du, u] = heap.top();
      heap.pop();
      if (du != dist_[u]) continue;
      if (balance_[u] < 0) {
        nearest = du;
        break;  // every node still on the heap is at least this far
      }
      auto relax = [&](NodeId v, std::int64_t rc) {
        if (du + rc < dist_[v]) {
          dist_[v] = du + rc;
          heap.push({dist_[v], v});
        }
      };
      for (ArcId a : d_.out_arcs(u)) relax(d_.arc(a).head, reduced_forward(a));
      for (ArcId a : d_.in_arcs(u)) {
        if (extra_[a] > 0) relax(d_.arc(a).tail, reduced_backward(a));
      }
    }
    // Labels past `nearest` are not final; clamp so the price update stays exact.
    if (nearest >= 0) {
      for (auto& x : dist_) {
        if (x != kUnreached && x > nearest) x = nearest;
      }
    }
    return nearest;
  }

  [[noreturn]] void fail() const {
    NodeSet side;
    for (NodeId v = 0; v < n_; ++v) {
      if (dist_[v] != kUnreached) side.push_back(v);
    }
    throw InfeasibleCirculation("no circulation satisfies the lower bounds", side);
  }

  // Tight residual step along arc a; returns the other endpoint
  // or -1 if the step is not admissible.
  NodeId tight_step(ArcId a, bool forward) const {
    if (forward) return reduced_forward(a) == 0 ? d_.arc(a).head : -1;
    return (extra_[a] > 0 && reduced_backward(a) == 0) ? d_.arc(a).tail : -1;
  }

  bool build_levels() {
    level_.assign(n_, -1);
    std::queue<NodeId> q;
    for (NodeId v = 0; v < n_; ++v) {
      if (balance_[v] > 0) {
        level_[v] = 0;
        q.push(v);
      }
    }
    bool hit = false;
    while (!q.empty()) {
      const NodeId u = q.front();
      q.pop();
      if (balance_[u] < 0) hit = true;
      auto visit = [&](NodeId v) {
        if (v >= 0 && level_[v] < 0) {
          level_[v] = level_[u] + 1;
          q.push(v);
        }
      };
      for (ArcId a : d_.out_arcs(u)) visit(tight_step(a, true));
      for (ArcId a : d_.in_arcs(u)) visit(tight_step(a, false));
    }
    return hit;
  }

  // Residual steps out of u are enumerated as out-arcs followed by in-arcs.
  int degree(NodeId u) const {
    return static_cast<int>(d_.out_arcs(u).size() + d_.in_arcs(u).size());
  }
  std::pair<ArcId, bool> step_at(NodeId u, int k) const {
    const auto outs = d_.out_arcs(u);
    if (k < static_cast<int>(outs.size())) return {outs[k], true};
    return {d_.in_arcs(u)[k - outs.size()], false};
  }

  void max_flow_on_tight_arcs() {
    while (build_levels()) {
      cursor_.assign(n_, 0);
      for (NodeId s = 0; s < n_; ++s) {
        while (balance_[s] > 0 && level_[s] == 0) {
          if (!augment_from(s)) break;
        }
      }
    }
  }

  // One augmenting path in the level graph from s; false when s is exhausted
  // for this phase.
  bool augment_from(NodeId s) {
    std::vector<std::pair<ArcId, bool>> path;
    NodeId v = s;
    while (true) {
      if (v != s && balance_[v] < 0) {
        std::int64_t amount = std::min(balance_[s], -balance_[v]);
        for (const auto& [a, fwd] : path) {
          if (!fwd) amount = std::min(amount, extra_[a]);
        }
        for (const auto& [a, fwd] : path) extra_[a] += fwd ? amount : -amount;
        balance_[s] -= amount;
        balance_[v] += amount;
        return true;
      }
      bool advanced = false;
      for (int& k = cursor_[v]; k < degree(v); ++k) {
        const auto [a, fwd] = step_at(v, k);
        const NodeId w = tight_step(a, fwd);
        if (w >= 0 && level_[w] == level_[v] + 1) {
          path.push_back({a, fwd});
          v = w;
          advanced = true;
          break;
        }
      }
      if (advanced) continue;
      level_[v] = -1;  // dead end for this phase
      if (path.empty()) return false;
      const auto [a, fwd] = path.back();
      path.pop_back();
      v = fwd ? d_.arc(a).tail : d_.arc(a).head;
      ++cursor_[v];
    }
  }

  const CirculationInstance& inst_;
  const Digraph& d_;
  int n_;
  std::vector<std::int64_t> extra_;
  std::vector<std::int64_t> balance_;
  std::vector<std::int64_t> price_;
  std::vector<std::int64_t> dist_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

void check_instance(const CirculationInstance& inst) {
  const int m = inst.digraph.arc_count();
  if (static_cast<int>(inst.lower.size()) != m || static_cast<int>(inst.cost.size()) != m) {
    throw InputError("lower/cost vectors must have one entry per arc");
  }
  for (ArcId a = 0; a < m; ++a) {
    if (inst.lower[a] < 0) throw InputError("negative lower bound on arc " + std::to_string(a));
    if (inst.cost[a] < 0) throw InputError("negative cost on arc " + std::to_string(a));
  }
}

}  // namespace

McfSolution solve(const CirculationInstance& instance) {
  check_instance(instance);
  return PrimalDual(instance).run();
}

std::int64_t dual_value(const CirculationInstance& instance, const Potential& pi) {
  std::int64_t total = 0;
  for (ArcId a = 0; a < instance.digraph.arc_count(); ++a) {
    total += instance.lower[a] * (instance.cost[a] - drop(instance.digraph, pi, a));
  }
  return total;
}

bool is_optimal(const CirculationInstance& instance, const McfSolution& solution) {
  const Digraph& d = instance.digraph;
  if (static_cast<int>(solution.flow.size()) != d.arc_count() ||
      static_cast<int>(solution.potential.size()) != d.node_count()) {
    return false;
  }
  std::vector<std::int64_t> balance(d.node_count(), 0);
  std::int64_t primal = 0;
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    const std::int64_t x = solution.flow[a];
    if (x < instance.lower[a]) return false;
    const std::int64_t dp = drop(d, solution.potential, a);
    if (dp > instance.cost[a]) return false;
    if (x > instance.lower[a] && dp != instance.cost[a]) return false;
    balance[d.arc(a).head] += x;
    balance[d.arc(a).tail] -= x;
    primal += instance.cost[a] * x;
  }
  if (std::any_of(balance.begin(), balance.end(), [](std::int64_t b) { return b != 0; })) {
    return false;
  }
  return primal == solution.objective && primal == dual_value(instance, solution.potential);
}

std::vector<WeightedCircuit> decompose(const Digraph& d, std::span<const std::int64_t> z) {
  if (static_cast<int>(z.size()) != d.arc_count()) throw InputError("flow has wrong length");
  std::vector<std::int64_t> balance(d.node_count(), 0);
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    if (z[a] < 0) throw InputError("flow has a negative entry");
    balance[d.arc(a).head] += z[a];
    balance[d.arc(a).tail] -= z[a];
  }
  for (std::int64_t b : balance) {
    if (b != 0) throw InputError("flow is not a circulation");
  }

  std::vector<std::int64_t> rest(z.begin(), z.end());
  std::vector<int> cursor(d.node_count(), 0);
  std::vector<int> position(d.node_count(), -1);
  std::vector<WeightedCircuit> circuits;

  auto next_arc = [&](NodeId u) -> ArcId {
    const auto outs = d.out_arcs(u);
    for (int& k = cursor[u]; k < static_cast<int>(outs.size()); ++k) {
      if (rest[outs[k]] > 0) return outs[k];
    }
    throw InvariantError("conservation violated during decomposition");
  };

  for (ArcId start = 0; start < d.arc_count(); ++start) {
    while (rest[start] > 0) {
      // Walk until a node repeats; the repeated segment is a one-way circuit.
      std::vector<NodeId> nodes{d.arc(start).tail};
      std::vector<ArcId> arcs;
      position[nodes[0]] = 0;
      ArcId a = start;
      while (true) {
        arcs.push_back(a);
        const NodeId v = d.arc(a).head;
        if (position[v] >= 0) {
          const int from = position[v];
          WeightedCircuit c;
          c.arcs.assign(arcs.begin() + from, arcs.end());
          c.multiplicity = rest[c.arcs.front()];
          for (ArcId e : c.arcs) c.multiplicity = std::min(c.multiplicity, rest[e]);
          for (ArcId e : c.arcs) rest[e] -= c.multiplicity;
          circuits.push_back(std::move(c));
          break;
        }
        position[v] = static_cast<int>(nodes.size());
        nodes.push_back(v);
        a = next_arc(v);
      }
      for (NodeId v : nodes) position[v] = -1;
    }
  }
  return circuits;
}

std::vector<WeightedCircuit> decompose(const BiDigraph& b, std::span<const std::int64_t> z) {
  return decompose(b.graph(), z);
}

}  // namespace sosi::mcc
