#pragma once

// JSON formats. Node and face names are opaque strings; list position defines
// ids. Weights are integers or "p/q" strings, absent entries mean 0. Output
// sets are sorted by name. Cover entries are [arc, value] pairs over the
// bidirected arc ids: arc k < |A| is input arc k, arc k + |A| is its reverse.

#include <string>
#include <vector>

#include <json.hpp>

#include "sosi/digraph.hpp"
#include "sosi/plane.hpp"
#include "sosi/rational.hpp"
#include "sosi/source_sink.hpp"

namespace sosi::json_io {

using Json = nlohmann::ordered_json;

struct NamedDigraph {
  std::vector<std::string> names;
  Digraph digraph;

  NodeId id(const std::string& name) const;
};

// {"nodes": [...], "arcs": [["u", "v"], ...]}
NamedDigraph parse_digraph(const Json& j);

// Per-node weight vector from {"name": value, ...}; a missing key gives zeros.
std::vector<Rational> parse_node_weights(const Json& j, const char* key, const NamedDigraph& g);

// List of node names.
NodeSet parse_node_list(const Json& j, const NamedDigraph& g);

struct NamedPlane {
  plane::PlaneBipartiteGraph graph;
  std::vector<Rational> w1, w2;
};

// {"S": [...], "T": [...], "edges": [["s", "t"], ...],
//  "faces": [{"id": "f", "boundary": [[edge, "+"|"-"], ...]}], "outer": "f",
//  "w1": {...}, "w2": {...}}
NamedPlane parse_plane(const Json& j);

Json rational_json(const Rational& r);
Rational parse_weight(const Json& j);

Json certificate_json(const NamedDigraph& g, const SoSiCertificate& cert);
Json sink_stable_json(const NamedDigraph& g, const SinkStableResult& result);
Json clar_fries_json(const plane::PlaneBipartiteGraph& g, const plane::ClarFriesResult& result);
Json face_set_json(const plane::PlaneBipartiteGraph& g, const plane::FaceSetResult& result);

Json read_file(const std::string& path);

}  // namespace sosi::json_io
