#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sosi/digraph.hpp"
#include "sosi/plane.hpp"
#include "sosi/source_sink.hpp"

namespace fixtures {

struct Named {
  sosi::Digraph digraph;
  std::vector<std::string> names;

  sosi::NodeId operator[](const std::string& name) const;
  sosi::NodeSet set(std::initializer_list<const char*> members) const;
  std::vector<sosi::Rational> indicator(std::initializer_list<const char*> members) const;
};

Named named(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& arcs);

// x->a1, a2->a1, a3->a2, x->a3, b1->x, b1->b2, b2->b3, b3->x
Named fig2();
// u->v, u->w, v->w
Named triangle();
// u->v, v->u
Named two_cycle();
// u->v
Named single_arc();

std::vector<sosi::Rational> constant(int n, std::int64_t value);
sosi::WeightPair uniform_pair(int n, std::int64_t value);

struct RandomInstance {
  sosi::Digraph digraph;
  sosi::WeightPair weights;
};

// n in [2, max_nodes], |A| in [n - 1, max_arcs], weights in [0, max_weight].
RandomInstance random_instance(std::mt19937_64& rng, int max_nodes, int max_arcs, int max_weight);

// Plane bipartite graph from straight-line coordinates. Faces are traced from
// the rotation system; the face of negative area is the outer one. Sides come
// from a 2-colouring that puts node 0 in S.
sosi::plane::PlaneBipartiteGraph plane_from_drawing(const std::vector<std::pair<double, double>>& points,
                                                    const std::vector<std::pair<int, int>>& edges);

// Benzenoid from hexagon centres in axial coordinates (q, r).
sosi::plane::PlaneBipartiteGraph benzenoid(const std::vector<std::pair<int, int>>& hexagons);

sosi::plane::PlaneBipartiteGraph benzene();
sosi::plane::PlaneBipartiteGraph naphthalene();
sosi::plane::PlaneBipartiteGraph anthracene();
sosi::plane::PlaneBipartiteGraph phenanthrene();
sosi::plane::PlaneBipartiteGraph pyrene();

// rows x cols nodes of the square lattice.
sosi::plane::PlaneBipartiteGraph grid(int rows, int cols);
sosi::plane::PlaneBipartiteGraph cube();

struct CatalogEntry {
  std::string name;
  sosi::plane::PlaneBipartiteGraph graph;
};

// Benzenoids with at most 16 nodes.
std::vector<CatalogEntry> benzenoid_catalog();

std::vector<sosi::Rational> inner_indicator(const sosi::plane::PlaneBipartiteGraph& g);

}  // namespace fixtures
