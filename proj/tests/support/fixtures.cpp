#include "fixtures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "sosi/oracle.hpp"

namespace fixtures {

using namespace sosi;

NodeId Named::operator[](const std::string& name) const {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::out_of_range("no node " + name);
  return static_cast<NodeId>(it - names.begin());
}

NodeSet Named::set(std::initializer_list<const char*> members) const {
  std::vector<NodeId> ids;
  for (const char* m : members) ids.push_back((*this)[m]);
  return make_node_set(std::move(ids));
}

std::vector<Rational> Named::indicator(std::initializer_list<const char*> members) const {
  std::vector<Rational> w(names.size());
  for (const char* m : members) w[(*this)[m]] = 1;
  return w;
}

Named named(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& arcs) {
  auto id = [&](const std::string& s) {
    return static_cast<NodeId>(std::find(names.begin(), names.end(), s) - names.begin());
  };
  std::vector<Arc> list;
  for (const auto& [t, h] : arcs) list.push_back({id(t), id(h)});
  const int n = static_cast<int>(names.size());
  return {Digraph(n, std::move(list)), std::move(names)};
}

Named fig2() {
  return named({"x", "a1", "a2", "a3", "b1", "b2", "b3"},
               {{"x", "a1"}, {"a2", "a1"}, {"a3", "a2"}, {"x", "a3"},
                {"b1", "x"}, {"b1", "b2"}, {"b2", "b3"}, {"b3", "x"}});
}

Named triangle() { return named({"u", "v", "w"}, {{"u", "v"}, {"u", "w"}, {"v", "w"}}); }
Named two_cycle() { return named({"u", "v"}, {{"u", "v"}, {"v", "u"}}); }
Named single_arc() { return named({"u", "v"}, {{"u", "v"}}); }

std::vector<Rational> constant(int n, std::int64_t value) { return std::vector<Rational>(n, Rational(value)); }

WeightPair uniform_pair(int n, std::int64_t value) { return {constant(n, value), constant(n, value)}; }

RandomInstance random_instance(std::mt19937_64& rng, int max_nodes, int max_arcs, int max_weight) {
  const int n = std::uniform_int_distribution<int>(2, max_nodes)(rng);
  const int m = std::uniform_int_distribution<int>(n - 1, std::max(n - 1, max_arcs))(rng);
  Digraph d = oracle::random_digraph(rng, n, m);
  std::uniform_int_distribution<int> weight(0, max_weight);
  WeightPair w = WeightPair::zero(n);
  for (NodeId v = 0; v < n; ++v) {
    w.source[v] = weight(rng);
    w.sink[v] = weight(rng);
  }
  return {std::move(d), std::move(w)};
}

plane::PlaneBipartiteGraph plane_from_drawing(const std::vector<std::pair<double, double>>& points,
                                              const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, edge)
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    adj[edges[e].first].push_back({edges[e].second, e});
    adj[edges[e].second].push_back({edges[e].first, e});
  }
  std::vector<int> colour(n, -1);
  std::queue<int> q;
  colour[0] = 0;
  q.push(0);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (auto [v, e] : adj[u]) {
      if (colour[v] < 0) {
        colour[v] = 1 - colour[u];
        q.push(v);
      } else if (colour[v] == colour[u]) {
        throw std::invalid_argument("drawing is not bipartite");
      }
    }
  }
  std::vector<int> relabel(n);
  std::vector<std::string> s_names, t_names;
  for (int v = 0; v < n; ++v) {
    if (colour[v] == 0) {
      relabel[v] = static_cast<int>(s_names.size());
      s_names.push_back("s" + std::to_string(v));
    }
  }
  for (int v = 0; v < n; ++v) {
    if (colour[v] == 1) {
      relabel[v] = static_cast<int>(s_names.size() + t_names.size());
      t_names.push_back("t" + std::to_string(v));
    }
  }

  auto angle = [&](int from, int to) {
    return std::atan2(points[to].second - points[from].second, points[to].first - points[from].first);
  };
  for (int v = 0; v < n; ++v) {
    std::sort(adj[v].begin(), adj[v].end(),
              [&](const auto& a, const auto& b) { return angle(v, a.first) < angle(v, b.first); });
  }

  // Dart (u, k) is the k-th rotation entry of u. From u -> v the face on the
  // left continues with the neighbour of v just clockwise of u.
  std::vector<std::vector<char>> used(n);
  for (int v = 0; v < n; ++v) used[v].assign(adj[v].size(), 0);
  std::vector<plane::Face> faces;
  std::vector<double> areas;
  for (int u0 = 0; u0 < n; ++u0) {
    for (int k0 = 0; k0 < static_cast<int>(adj[u0].size()); ++k0) {
      if (used[u0][k0]) continue;
      plane::Face face;
      face.id = "f" + std::to_string(faces.size());
      double area = 0;
      int u = u0, k = k0;
      while (!used[u][k]) {
        used[u][k] = 1;
        const auto [v, e] = adj[u][k];
        face.boundary.push_back({e, colour[u] == 0});
        area += points[u].first * points[v].second - points[v].first * points[u].second;
        const auto& rot = adj[v];
        int back = 0;
        while (rot[back].second != e) ++back;
        const int next = (back + static_cast<int>(rot.size()) - 1) % static_cast<int>(rot.size());
        u = v;
        k = next;
      }
      faces.push_back(std::move(face));
      areas.push_back(area);
    }
  }
  const int outer = static_cast<int>(std::min_element(areas.begin(), areas.end()) - areas.begin());
  std::vector<std::pair<NodeId, NodeId>> global;
  for (const auto& [a, b] : edges) global.emplace_back(relabel[a], relabel[b]);
  return plane::PlaneBipartiteGraph(std::move(s_names), std::move(t_names), global, std::move(faces), outer);
}

plane::PlaneBipartiteGraph benzenoid(const std::vector<std::pair<int, int>>& hexagons) {
  const double pi = std::acos(-1.0);
  std::map<std::pair<long, long>, int> index;
  std::vector<std::pair<double, double>> points;
  std::set<std::pair<int, int>> edge_set;
  auto vertex = [&](double x, double y) {
    const std::pair<long, long> key{std::lround(x * 1000), std::lround(y * 1000)};
    const auto [it, fresh] = index.emplace(key, static_cast<int>(points.size()));
    if (fresh) points.emplace_back(x, y);
    return it->second;
  };
  for (const auto& [q, r] : hexagons) {
    const double cx = std::sqrt(3.0) * (q + r / 2.0);
    const double cy = 1.5 * r;
    std::array<int, 6> ring{};
    for (int k = 0; k < 6; ++k) {
      const double a = pi / 6 + k * pi / 3;
      ring[k] = vertex(cx + std::cos(a), cy + std::sin(a));
    }
    for (int k = 0; k < 6; ++k) {
      const int a = ring[k], b = ring[(k + 1) % 6];
      edge_set.insert({std::min(a, b), std::max(a, b)});
    }
  }
  return plane_from_drawing(points, {edge_set.begin(), edge_set.end()});
}

plane::PlaneBipartiteGraph benzene() { return benzenoid({{0, 0}}); }
plane::PlaneBipartiteGraph naphthalene() { return benzenoid({{0, 0}, {1, 0}}); }
plane::PlaneBipartiteGraph anthracene() { return benzenoid({{0, 0}, {1, 0}, {2, 0}}); }
plane::PlaneBipartiteGraph phenanthrene() { return benzenoid({{0, 0}, {1, 0}, {1, 1}}); }
plane::PlaneBipartiteGraph pyrene() { return benzenoid({{0, 0}, {1, 0}, {0, 1}, {1, -1}}); }

plane::PlaneBipartiteGraph grid(int rows, int cols) {
  std::vector<std::pair<double, double>> points;
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      points.emplace_back(c, r);
      const int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return plane_from_drawing(points, edges);
}

plane::PlaneBipartiteGraph cube() {
  const std::vector<std::pair<double, double>> points{{0, 0}, {4, 0}, {4, 4}, {0, 4},
                                                      {1, 1}, {3, 1}, {3, 3}, {1, 3}};
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < 4; ++k) {
    edges.emplace_back(k, (k + 1) % 4);
    edges.emplace_back(4 + k, 4 + (k + 1) % 4);
    edges.emplace_back(k, k + 4);
  }
  return plane_from_drawing(points, edges);
}

std::vector<CatalogEntry> benzenoid_catalog() {
  return {{"benzene", benzene()},
          {"naphthalene", naphthalene()},
          {"anthracene", anthracene()},
          {"phenanthrene", phenanthrene()},
          {"pyrene", pyrene()}};
}

std::vector<Rational> inner_indicator(const plane::PlaneBipartiteGraph& g) {
  std::vector<Rational> w(g.face_count(), Rational(1));
  w[g.outer_face()] = 0;
  return w;
}

}  // namespace fixtures
