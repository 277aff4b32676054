#include "sosi/oracle.hpp"

#include <algorithm>
#include <string>

namespace sosi::oracle {

namespace {

void check_arc_budget(const Digraph& d, const OracleBudget& budget) {
  // Subsets are 32-bit masks.
  if (d.arc_count() > budget.max_arcs || d.arc_count() > 30) {
    throw BudgetError("oracle refuses " + std::to_string(d.arc_count()) + " arcs (limit " +
                      std::to_string(budget.max_arcs) + ")");
  }
}

// Propagates the prescribed drops over the underlying undirected graph; fails
// when some circuit closes with a nonzero sum.
bool exact_drop_potential(const Digraph& d, std::uint32_t mask, Potential& pi) {
  const int n = d.node_count();
  pi.assign(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (ArcId a : d.out_arcs(u)) {
      const NodeId v = d.arc(a).head;
      const std::int64_t want = pi[u] + ((mask >> a) & 1u);
      if (!seen[v]) {
        seen[v] = 1;
        pi[v] = want;
        stack.push_back(v);
      } else if (pi[v] != want) {
        return false;
      }
    }
    for (ArcId a : d.in_arcs(u)) {
      const NodeId v = d.arc(a).tail;
      const std::int64_t want = pi[u] - ((mask >> a) & 1u);
      if (!seen[v]) {
        seen[v] = 1;
        pi[v] = want;
        stack.push_back(v);
      } else if (pi[v] != want) {
        return false;
      }
    }
  }
  normalize(pi);
  return true;
}

Rational total(const std::vector<Rational>& w, const std::vector<int>& ids) {
  Rational s(0);
  for (int i : ids) s += w[i];
  return s;
}

}  // namespace

std::vector<Reorientation> enumerate_reorientations(const Digraph& d, OracleBudget budget) {
  check_arc_budget(d, budget);
  std::vector<Reorientation> out;
  const std::uint32_t limit = 1u << d.arc_count();
  Potential pi;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (!exact_drop_potential(d, mask, pi)) continue;
    Reorientation r;
    for (ArcId a = 0; a < d.arc_count(); ++a) {
      if ((mask >> a) & 1u) r.reversed.push_back(a);
    }
    r.potential = pi;
    out.push_back(std::move(r));
  }
  return out;
}

Digraph reorient(const Digraph& d, const std::vector<ArcId>& reversed) {
  std::vector<Arc> arcs(d.arcs().begin(), d.arcs().end());
  for (ArcId a : reversed) std::swap(arcs[a].tail, arcs[a].head);
  return Digraph(d.node_count(), std::move(arcs));
}

BruteSoSi brute_max_so_si(const Digraph& d, const WeightPair& w, OracleBudget budget) {
  const int n = d.node_count();
  if (static_cast<int>(w.source.size()) != n || static_cast<int>(w.sink.size()) != n) {
    throw InputError("weights must have one entry per node");
  }
  BruteSoSi best;
  bool first = true;
  for (const Reorientation& r : enumerate_reorientations(d, budget)) {
    std::vector<int> indeg(n, 0), outdeg(n, 0);
    std::vector<char> flipped(d.arc_count(), 0);
    for (ArcId a : r.reversed) flipped[a] = 1;
    for (ArcId a = 0; a < d.arc_count(); ++a) {
      const Arc& e = d.arc(a);
      ++outdeg[flipped[a] ? e.head : e.tail];
      ++indeg[flipped[a] ? e.tail : e.head];
    }
    NodeSet sources, sinks;
    for (NodeId v = 0; v < n; ++v) {
      if (indeg[v] == 0) sources.push_back(v);
      if (outdeg[v] == 0) sinks.push_back(v);
    }
    const Rational value = total(w.source, sources) + total(w.sink, sinks);
    if (first || value > best.value) {
      best = {value, sources, sinks, r.reversed};
      first = false;
    }
  }
  return best;
}

std::vector<plane::EdgeSet> enumerate_matchings(const plane::PlaneBipartiteGraph& g,
                                                OracleBudget budget) {
  const int ns = g.s_count();
  std::vector<std::vector<plane::EdgeId>> incident(ns);
  for (plane::EdgeId e = 0; e < g.edge_count(); ++e) incident[g.s_end(e)].push_back(e);

  std::vector<plane::EdgeSet> out;
  std::vector<char> t_used(g.node_count(), 0);
  plane::EdgeSet chosen;
  // Match S nodes in index order; each branch picks the edge for node s.
  auto extend = [&](auto&& self, NodeId s) -> void {
    if (s == ns) {
      if (static_cast<std::int64_t>(out.size()) >= budget.max_matchings) {
        throw BudgetError("more than " + std::to_string(budget.max_matchings) + " perfect matchings");
      }
      plane::EdgeSet m = chosen;
      std::sort(m.begin(), m.end());
      out.push_back(std::move(m));
      return;
    }
    for (plane::EdgeId e : incident[s]) {
      const NodeId t = g.t_end(e);
      if (t_used[t]) continue;
      t_used[t] = 1;
      chosen.push_back(e);
      self(self, s + 1);
      chosen.pop_back();
      t_used[t] = 0;
    }
  };
  if (ns * 2 == g.node_count()) extend(extend, 0);
  return out;
}

BruteClarFries brute_clar_fries(const plane::PlaneBipartiteGraph& g, const std::vector<Rational>& w1,
                                const std::vector<Rational>& w2, OracleBudget budget) {
  if (static_cast<int>(w1.size()) != g.face_count() || static_cast<int>(w2.size()) != g.face_count()) {
    throw InputError("face weights must have one entry per face");
  }
  BruteClarFries best;
  bool first = true;
  const auto matchings = enumerate_matchings(g, budget);
  for (const plane::EdgeSet& m : matchings) {
    const plane::AlternatingFaces faces = plane::alternating_faces(g, m);
    const Rational value = total(w1, faces.clockwise) + total(w2, faces.anticlockwise);
    if (first || value > best.value) {
      best.value = value;
      best.matching = m;
      best.clockwise = faces.clockwise;
      best.anticlockwise = faces.anticlockwise;
      first = false;
    }
  }
  best.matchings = static_cast<std::int64_t>(matchings.size());
  return best;
}

Digraph random_digraph(std::mt19937_64& rng, int node_count, int arc_count) {
  if (node_count < 2 || arc_count < node_count - 1) {
    throw InputError("random digraph needs n >= 2 and at least n - 1 arcs");
  }
  std::vector<NodeId> order(node_count);
  for (NodeId v = 0; v < node_count; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<Arc> arcs;
  arcs.reserve(arc_count);
  auto add = [&](NodeId a, NodeId b) { arcs.push_back(coin(rng) ? Arc{a, b} : Arc{b, a}); };
  for (int k = 1; k < node_count; ++k) {
    std::uniform_int_distribution<int> pick(0, k - 1);
    add(order[k], order[pick(rng)]);
  }
  std::uniform_int_distribution<NodeId> any(0, node_count - 1);
  while (static_cast<int>(arcs.size()) < arc_count) {
    const NodeId a = any(rng), b = any(rng);
    if (a != b) add(a, b);
  }
  std::shuffle(arcs.begin(), arcs.end(), rng);
  return Digraph(node_count, std::move(arcs));
}

}  // namespace sosi::oracle
