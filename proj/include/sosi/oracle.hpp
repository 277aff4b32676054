#pragma once

// Exhaustive reference implementations. They share no solving code with the
// optimizers they check: reorientations are found by propagating exact 0/1
// drops, matchings by backtracking.

#include <cstdint>
#include <random>
#include <vector>

#include "sosi/digraph.hpp"
#include "sosi/plane.hpp"
#include "sosi/source_sink.hpp"

namespace sosi::oracle {

struct OracleBudget {
  int max_arcs = 14;
  std::int64_t max_matchings = 100000;
};

struct Reorientation {
  std::vector<ArcId> reversed;  // sorted
  Potential potential;          // drop 1 on `reversed`, 0 elsewhere; normalized
};

// Every R such that D with R reversed is dicut-equivalent to D. R = {} first.
std::vector<Reorientation> enumerate_reorientations(const Digraph& d, OracleBudget budget = {});

// D with the arcs of R reversed; arc ids are kept.
Digraph reorient(const Digraph& d, const std::vector<ArcId>& reversed);

struct BruteSoSi {
  Rational value;
  NodeSet sources;
  NodeSet sinks;
  std::vector<ArcId> reversed;
};

BruteSoSi brute_max_so_si(const Digraph& d, const WeightPair& w, OracleBudget budget = {});

std::vector<plane::EdgeSet> enumerate_matchings(const plane::PlaneBipartiteGraph& g,
                                                OracleBudget budget = {});

struct BruteClarFries {
  Rational value;
  plane::EdgeSet matching;
  plane::FaceSet clockwise;
  plane::FaceSet anticlockwise;
  std::int64_t matchings = 0;
};

BruteClarFries brute_clar_fries(const plane::PlaneBipartiteGraph& g, const std::vector<Rational>& w1,
                                const std::vector<Rational>& w2, OracleBudget budget = {});

// Random spanning tree plus extra arcs, each arc in a random direction.
// Parallel arcs may occur; loops never do.
Digraph random_digraph(std::mt19937_64& rng, int node_count, int arc_count);

}  // namespace sosi::oracle
