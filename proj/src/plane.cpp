#include "sosi/plane.hpp"

#include <algorithm>
#include <functional>

namespace sosi::plane {

const char* to_string(PlaneErrorKind kind) {
  switch (kind) {
    case PlaneErrorKind::kNonBipartite: return "non-bipartite";
    case PlaneErrorKind::kBadEdge: return "bad edge";
    case PlaneErrorKind::kBoundaryNotClosed: return "boundary not closed";
    case PlaneErrorKind::kEdgeSideMismatch: return "edge-side mismatch";
    case PlaneErrorKind::kEulerFailure: return "Euler failure";
    case PlaneErrorKind::kNotTwoConnected: return "not 2-connected";
    case PlaneErrorKind::kNoPerfectMatching: return "no perfect matching";
    case PlaneErrorKind::kBadFace: return "bad face";
  }
  return "plane graph error";
}

std::optional<EdgeSet> find_perfect_matching(int s_count, int t_count,
                                             const std::vector<std::pair<NodeId, NodeId>>& edges) {
  if (s_count != t_count) return std::nullopt;
  std::vector<std::vector<EdgeId>> incident(s_count);
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) incident[edges[e].first].push_back(e);
  std::vector<EdgeId> mate_of_t(t_count, -1);
  std::vector<int> visited(t_count, -1);

  // Kuhn's augmenting paths; `stamp` separates searches.
  std::function<bool(NodeId, int)> augment = [&](NodeId s, int stamp) -> bool {
    for (EdgeId e : incident[s]) {
      const int t = edges[e].second - s_count;
      if (visited[t] == stamp) continue;
      visited[t] = stamp;
      if (mate_of_t[t] < 0 || augment(edges[mate_of_t[t]].first, stamp)) {
        mate_of_t[t] = e;
        return true;
      }
    }
    return false;
  };
  for (NodeId s = 0; s < s_count; ++s) {
    if (!augment(s, s)) return std::nullopt;
  }
  EdgeSet m(mate_of_t.begin(), mate_of_t.end());
  std::sort(m.begin(), m.end());
  return m;
}

PlaneBipartiteGraph::PlaneBipartiteGraph(std::vector<std::string> s_names,
                                         std::vector<std::string> t_names,
                                         const std::vector<std::pair<NodeId, NodeId>>& edges,
                                         std::vector<Face> faces, FaceId outer_face)
    : s_names_(std::move(s_names)),
      t_names_(std::move(t_names)),
      faces_(std::move(faces)),
      outer_(outer_face) {
  const int ns = s_count();
  const int n = node_count();
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw PlaneError(PlaneErrorKind::kBadEdge, "endpoint out of range");
    if (a == b) throw PlaneError(PlaneErrorKind::kBadEdge, "loop at " + node_name(a));
    if (in_s(a) == in_s(b)) {
      throw PlaneError(PlaneErrorKind::kNonBipartite,
                       "edge " + node_name(a) + "-" + node_name(b) + " joins one side");
    }
    edges_.push_back(in_s(a) ? std::pair{a, b} : std::pair{b, a});
  }
  if (outer_ < 0 || outer_ >= face_count()) throw PlaneError(PlaneErrorKind::kBadFace, "outer face missing");

  side_face_.assign(edge_count(), {-1, -1});
  for (FaceId f = 0; f < face_count(); ++f) {
    const auto& bd = faces_[f].boundary;
    if (bd.size() < 2) throw PlaneError(PlaneErrorKind::kBadFace, "face " + faces_[f].id + " is too short");
    for (const EdgeSide& side : bd) {
      if (side.edge < 0 || side.edge >= edge_count()) {
        throw PlaneError(PlaneErrorKind::kBadFace, "face " + faces_[f].id + " names an unknown edge");
      }
      FaceId& slot = side_face_[side.edge][side.forward ? 1 : 0];
      if (slot >= 0) {
        throw PlaneError(PlaneErrorKind::kEdgeSideMismatch,
                         "edge " + std::to_string(side.edge) + " traversed twice in one direction");
      }
      slot = f;
    }
    for (std::size_t k = 0; k < bd.size(); ++k) {
      const EdgeSide& a = bd[k];
      const EdgeSide& b = bd[(k + 1) % bd.size()];
      const NodeId a_head = a.forward ? t_end(a.edge) : s_end(a.edge);
      const NodeId b_tail = b.forward ? s_end(b.edge) : t_end(b.edge);
      if (a_head != b_tail) {
        throw PlaneError(PlaneErrorKind::kBoundaryNotClosed, "face " + faces_[f].id + " does not chain");
      }
    }
    auto nodes = face_nodes(f);
    std::sort(nodes.begin(), nodes.end());
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
      throw PlaneError(PlaneErrorKind::kNotTwoConnected,
                       "face " + faces_[f].id + " boundary is not a circuit");
    }
  }
  for (EdgeId e = 0; e < edge_count(); ++e) {
    if (side_face_[e][0] < 0 || side_face_[e][1] < 0) {
      throw PlaneError(PlaneErrorKind::kEdgeSideMismatch,
                       "edge " + std::to_string(e) + " is not bounded once in each direction");
    }
    if (side_face_[e][0] == side_face_[e][1]) {
      throw PlaneError(PlaneErrorKind::kNotTwoConnected, "edge " + std::to_string(e) + " is a bridge");
    }
  }
  if (n - edge_count() + face_count() != 2) {
    throw PlaneError(PlaneErrorKind::kEulerFailure,
                     "|V| - |E| + |F| = " + std::to_string(n - edge_count() + face_count()));
  }

  std::vector<std::vector<NodeId>> adj(n);
  for (const auto& [s, t] : edges_) {
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  std::vector<char> seen(n, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (NodeId u : adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  if (std::count(seen.begin(), seen.end(), 0) > 0) {
    throw PlaneError(PlaneErrorKind::kNotTwoConnected, "graph is disconnected");
  }

  auto m = find_perfect_matching(ns, n - ns, edges_);
  if (!m) throw PlaneError(PlaneErrorKind::kNoPerfectMatching, "graph has no perfect matching");
  initial_matching_ = std::move(*m);
}

FaceSet PlaneBipartiteGraph::inner_faces() const {
  FaceSet out;
  for (FaceId f = 0; f < face_count(); ++f) {
    if (f != outer_) out.push_back(f);
  }
  return out;
}

std::vector<NodeId> PlaneBipartiteGraph::face_nodes(FaceId f) const {
  std::vector<NodeId> nodes;
  for (const EdgeSide& side : faces_[f].boundary) {
    nodes.push_back(side.forward ? s_end(side.edge) : t_end(side.edge));
  }
  return nodes;
}

EdgeSet perfect_matching(const PlaneBipartiteGraph& g) { return g.initial_matching(); }

bool is_perfect_matching(const PlaneBipartiteGraph& g, const EdgeSet& m) {
  std::vector<int> covered(g.node_count(), 0);
  for (EdgeId e : m) {
    if (e < 0 || e >= g.edge_count()) return false;
    ++covered[g.s_end(e)];
    ++covered[g.t_end(e)];
  }
  return std::all_of(covered.begin(), covered.end(), [](int c) { return c == 1; });
}

MatchingOrientation orient_by_matching(const PlaneBipartiteGraph& g, const EdgeSet& m) {
  if (!is_perfect_matching(g, m)) throw InputError("edge set is not a perfect matching");
  std::vector<char> forward(g.edge_count(), 1);
  for (EdgeId e : m) forward[e] = 0;
  std::vector<Arc> arcs;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    arcs.push_back(forward[e] ? Arc{g.s_end(e), g.t_end(e)} : Arc{g.t_end(e), g.s_end(e)});
  }
  EdgeSet sorted = m;
  std::sort(sorted.begin(), sorted.end());
  return {sorted, Digraph(g.node_count(), std::move(arcs)), std::move(forward)};
}

DualDigraph planar_dual(const PlaneBipartiteGraph& g, const MatchingOrientation& mo) {
  std::vector<Arc> arcs;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const bool fwd = mo.forward[e];
    arcs.push_back({g.side_face(e, fwd), g.side_face(e, !fwd)});
  }
  return {Digraph(g.face_count(), std::move(arcs))};
}

namespace {

AlternatingFaces classify(const PlaneBipartiteGraph& g, const std::vector<char>& forward) {
  AlternatingFaces out;
  for (FaceId f = 0; f < g.face_count(); ++f) {
    std::size_t along = 0;
    const auto& bd = g.face(f).boundary;
    for (const EdgeSide& side : bd) along += (side.forward == static_cast<bool>(forward[side.edge]));
    if (along == bd.size()) out.anticlockwise.push_back(f);
    if (along == 0) out.clockwise.push_back(f);
  }
  return out;
}

bool node_disjoint(const PlaneBipartiteGraph& g, const FaceSet& faces) {
  std::vector<char> used(g.node_count(), 0);
  for (FaceId f : faces) {
    for (NodeId v : g.face_nodes(f)) {
      if (used[v]) return false;
      used[v] = 1;
    }
  }
  return true;
}

Rational face_weight(const std::vector<Rational>& w, const FaceSet& faces) {
  Rational total(0);
  for (FaceId f : faces) total += w[f];
  return total;
}

}  // namespace

AlternatingFaces alternating_faces(const PlaneBipartiteGraph& g, const EdgeSet& m) {
  return classify(g, orient_by_matching(g, m).forward);
}

ClarFriesResult solve_clar_fries(const PlaneBipartiteGraph& g, const std::vector<Rational>& w1,
                                 const std::vector<Rational>& w2,
                                 const std::optional<EdgeSet>& start) {
  if (static_cast<int>(w1.size()) != g.face_count() || static_cast<int>(w2.size()) != g.face_count()) {
    throw InputError("face weights must have one entry per face");
  }
  const MatchingOrientation mo = orient_by_matching(g, start ? *start : g.initial_matching());
  const DualDigraph dual = planar_dual(g, mo);

  ClarFriesResult out;
  out.certificate = max_so_si(dual.digraph, WeightPair{w2, w1});

  // Reversing a dual dicut flips a union of one-way circuits of G_M, which
  // keeps every in-degree and hence yields G_{M'} for another matching M'.
  std::vector<char> forward = mo.forward;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (drop(dual.digraph, out.certificate.witness, e) == 1) forward[e] = !forward[e];
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!forward[e]) out.matching.push_back(e);
  }
  if (!is_perfect_matching(g, out.matching)) {
    throw InvariantError("recovered edge set is not a perfect matching");
  }
  const AlternatingFaces faces = classify(g, forward);
  out.clockwise = faces.clockwise;
  out.anticlockwise = faces.anticlockwise;

  if (!std::includes(out.clockwise.begin(), out.clockwise.end(), out.certificate.sinks.begin(),
                     out.certificate.sinks.end()) ||
      !std::includes(out.anticlockwise.begin(), out.anticlockwise.end(),
                     out.certificate.sources.begin(), out.certificate.sources.end())) {
    throw InvariantError("dual sinks/sources are not clockwise/anti-clockwise faces");
  }
  if (!node_disjoint(g, out.clockwise) || !node_disjoint(g, out.anticlockwise)) {
    throw InvariantError("same-sense alternating faces share a node");
  }
  out.value = face_weight(w1, out.clockwise) + face_weight(w2, out.anticlockwise);
  if (out.value != out.certificate.value) {
    throw InvariantError("face weight of M' differs from the certificate value");
  }
  return out;
}

namespace {

FaceSetResult summarize(const PlaneBipartiteGraph& g, ClarFriesResult detail, bool both_senses) {
  FaceSetResult out;
  FaceSet alternating = detail.clockwise;
  if (both_senses) {
    alternating.insert(alternating.end(), detail.anticlockwise.begin(), detail.anticlockwise.end());
    std::sort(alternating.begin(), alternating.end());
  }
  for (FaceId f : alternating) {
    if (f != g.outer_face()) out.faces.push_back(f);
  }
  out.value = static_cast<std::int64_t>(out.faces.size());
  if (Rational(out.value) != detail.value) throw InvariantError("face count differs from optimum");
  out.matching = detail.matching;
  out.detail = std::move(detail);
  return out;
}

std::vector<Rational> inner_indicator(const PlaneBipartiteGraph& g) {
  std::vector<Rational> w(g.face_count(), Rational(1));
  w[g.outer_face()] = 0;
  return w;
}

}  // namespace

FaceSetResult clar_number(const PlaneBipartiteGraph& g) {
  const auto w = inner_indicator(g);
  return summarize(g, solve_clar_fries(g, w, std::vector<Rational>(g.face_count())), false);
}

FaceSetResult fries_number(const PlaneBipartiteGraph& g) {
  const auto w = inner_indicator(g);
  return summarize(g, solve_clar_fries(g, w, w), true);
}

}  // namespace sosi::plane
