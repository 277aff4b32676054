#pragma once

// Minimum-cost circulation with arc lower bounds, nonnegative integer costs and
// no upper bounds. Returns an integral optimal flow together with an integral
// optimal potential pi satisfying pi[head] - pi[tail] <= cost on every arc.

#include <cstdint>
#include <span>
#include <vector>

#include "sosi/digraph.hpp"

namespace sosi::mcc {

struct CirculationInstance {
  Digraph digraph;
  std::vector<std::int64_t> lower;  // >= 0
  std::vector<std::int64_t> cost;   // >= 0
};

struct McfSolution {
  std::vector<std::int64_t> flow;
  Potential potential;
  std::int64_t objective = 0;
};

// No circulation meets the lower bounds. `closed_side` is a node set with no
// leaving arcs whose lower bounds force flow into it.
class InfeasibleCirculation : public InputError {
 public:
  InfeasibleCirculation(const std::string& what, NodeSet closed_side)
      : InputError(what), closed_side_(std::move(closed_side)) {}
  const NodeSet& closed_side() const { return closed_side_; }

 private:
  NodeSet closed_side_;
};

McfSolution solve(const CirculationInstance& instance);

// Dual objective: sum over arcs of lower * (cost - drop).
std::int64_t dual_value(const CirculationInstance& instance, const Potential& pi);

// Primal feasibility, dual feasibility, complementary slackness and equality of
// the objective with the dual value, all checked exactly.
bool is_optimal(const CirculationInstance& instance, const McfSolution& solution);

struct WeightedCircuit {
  std::vector<ArcId> arcs;  // traversal order; head of each is tail of the next
  std::int64_t multiplicity = 0;
};

// Splits a nonnegative integral circulation into one-way circuits.
std::vector<WeightedCircuit> decompose(const Digraph& d, std::span<const std::int64_t> z);
std::vector<WeightedCircuit> decompose(const BiDigraph& b, std::span<const std::int64_t> z);

}  // namespace sosi::mcc
