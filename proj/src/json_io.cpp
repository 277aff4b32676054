#include "sosi/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <unordered_map>

namespace sosi::json_io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::unordered_map<std::string, int> index_names(const std::vector<std::string>& names, const char* what) {
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) {
    if (!index.emplace(names[i], i).second) {
      throw InputError(std::string("duplicate ") + what + " \"" + names[i] + "\"");
    }
  }
  return index;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be a list");
  std::vector<std::string> out;
  for (const Json& x : j) out.push_back(as_string(x, what));
  return out;
}

Json sorted_names(const std::vector<std::string>& names, const std::vector<int>& ids) {
  std::vector<std::string> out;
  for (int i : ids) out.push_back(names[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> weights_by_name(const Json& j, const char* key,
                                      const std::unordered_map<std::string, int>& index, int count) {
  std::vector<Rational> w(count);
  if (!j.contains(key)) return w;
  const Json& map = j.at(key);
  if (!map.is_object()) throw InputError(std::string("\"") + key + "\" must be an object");
  for (const auto& [name, value] : map.items()) {
    const auto it = index.find(name);
    if (it == index.end()) throw InputError(std::string("\"") + key + "\" names unknown \"" + name + "\"");
    w[it->second] = parse_weight(value);
    if (w[it->second] < 0) throw InputError(std::string("negative weight in \"") + key + "\"");
  }
  return w;
}

Json sparse(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (int k = 0; k < static_cast<int>(values.size()); ++k) {
    if (values[k] != 0) out.push_back(Json::array({k, rational_json(values[k])}));
  }
  return out;
}

Json checks_json(const CertificateChecks& c) {
  return Json{{"solver_optimal", c.solver_optimal},
              {"minmax_equal", c.minmax_equal},
              {"pair_verified", c.pair_verified},
              {"witness_small_dropping", c.witness_small_dropping},
              {"vertical_sums_binary", c.vertical_sums_binary},
              {"cover_valid", c.cover_valid},
              {"cover_integral", c.cover_integral}};
}

Json face_names(const plane::PlaneBipartiteGraph& g, const plane::FaceSet& faces) {
  std::vector<std::string> out;
  for (plane::FaceId f : faces) out.push_back(g.face(f).id);
  std::sort(out.begin(), out.end());
  return out;
}

Json matching_json(const plane::PlaneBipartiteGraph& g, const plane::EdgeSet& m) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (plane::EdgeId e : m) pairs.emplace_back(g.node_name(g.s_end(e)), g.node_name(g.t_end(e)));
  std::sort(pairs.begin(), pairs.end());
  Json out = Json::array();
  for (const auto& [s, t] : pairs) out.push_back(Json::array({s, t}));
  return out;
}

}  // namespace

NodeId NamedDigraph::id(const std::string& name) const {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw InputError("unknown node \"" + name + "\"");
  return static_cast<NodeId>(it - names.begin());
}

Rational parse_weight(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("weights must be integers or \"p/q\" strings");
}

Json rational_json(const Rational& r) {
  if (is_integral(r)) return r.numerator();
  return to_string(r);
}

NamedDigraph parse_digraph(const Json& j) {
  std::vector<std::string> names = string_list(field(j, "nodes"), "node name");
  const auto index = index_names(names, "node");
  const Json& arcs_json = field(j, "arcs");
  if (!arcs_json.is_array()) throw InputError("\"arcs\" must be a list");
  std::vector<Arc> arcs;
  for (const Json& a : arcs_json) {
    if (!a.is_array() || a.size() != 2) throw InputError("an arc must be a [tail, head] pair");
    Arc arc{};
    for (int side = 0; side < 2; ++side) {
      const std::string name = as_string(a[side], "arc endpoint");
      const auto it = index.find(name);
      if (it == index.end()) throw InputError("arc names unknown node \"" + name + "\"");
      (side == 0 ? arc.tail : arc.head) = it->second;
    }
    arcs.push_back(arc);
  }
  const int n = static_cast<int>(names.size());
  return {std::move(names), Digraph(n, std::move(arcs))};
}

std::vector<Rational> parse_node_weights(const Json& j, const char* key, const NamedDigraph& g) {
  return weights_by_name(j, key, index_names(g.names, "node"), g.digraph.node_count());
}

NodeSet parse_node_list(const Json& j, const NamedDigraph& g) {
  std::vector<NodeId> ids;
  for (const std::string& name : string_list(j, "node name")) ids.push_back(g.id(name));
  return make_node_set(std::move(ids));
}

NamedPlane parse_plane(const Json& j) {
  using plane::PlaneError;
  using plane::PlaneErrorKind;
  std::vector<std::string> s_names = string_list(field(j, "S"), "node name");
  std::vector<std::string> t_names = string_list(field(j, "T"), "node name");
  std::vector<std::string> all = s_names;
  all.insert(all.end(), t_names.begin(), t_names.end());
  const auto index = index_names(all, "node");

  std::vector<std::pair<NodeId, NodeId>> edges;
  const Json& edges_json = field(j, "edges");
  if (!edges_json.is_array()) throw InputError("\"edges\" must be a list");
  for (const Json& e : edges_json) {
    if (!e.is_array() || e.size() != 2) throw PlaneError(PlaneErrorKind::kBadEdge, "edge must be a pair");
    std::array<NodeId, 2> ends{};
    for (int k = 0; k < 2; ++k) {
      const std::string name = as_string(e[k], "edge endpoint");
      const auto it = index.find(name);
      if (it == index.end()) throw PlaneError(PlaneErrorKind::kBadEdge, "unknown node \"" + name + "\"");
      ends[k] = it->second;
    }
    edges.emplace_back(ends[0], ends[1]);
  }

  std::vector<plane::Face> faces;
  const Json& faces_json = field(j, "faces");
  if (!faces_json.is_array()) throw InputError("\"faces\" must be a list");
  for (const Json& f : faces_json) {
    plane::Face face;
    face.id = as_string(field(f, "id"), "face id");
    const Json& boundary = field(f, "boundary");
    if (!boundary.is_array()) throw PlaneError(PlaneErrorKind::kBadFace, "boundary must be a list");
    for (const Json& side : boundary) {
      if (!side.is_array() || side.size() != 2 || !side[0].is_number_integer()) {
        throw PlaneError(PlaneErrorKind::kBadFace, "boundary entries are [edge, \"+\"|\"-\"]");
      }
      const std::string dir = as_string(side[1], "edge-side direction");
      if (dir != "+" && dir != "-") throw PlaneError(PlaneErrorKind::kBadFace, "direction must be + or -");
      face.boundary.push_back({side[0].get<int>(), dir == "+"});
    }
    faces.push_back(std::move(face));
  }
  std::vector<std::string> face_ids;
  for (const auto& f : faces) face_ids.push_back(f.id);
  const auto face_index = index_names(face_ids, "face");
  const std::string outer = as_string(field(j, "outer"), "outer face");
  const auto outer_it = face_index.find(outer);
  if (outer_it == face_index.end()) throw PlaneError(PlaneErrorKind::kBadFace, "unknown outer face");

  const int face_count = static_cast<int>(faces.size());
  std::vector<Rational> w1 = weights_by_name(j, "w1", face_index, face_count);
  std::vector<Rational> w2 = weights_by_name(j, "w2", face_index, face_count);
  return {plane::PlaneBipartiteGraph(std::move(s_names), std::move(t_names), edges, std::move(faces),
                                     outer_it->second),
          std::move(w1), std::move(w2)};
}

Json certificate_json(const NamedDigraph& g, const SoSiCertificate& cert) {
  Json potential = Json::object();
  std::vector<int> order(g.names.size());
  for (int v = 0; v < static_cast<int>(order.size()); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return g.names[a] < g.names[b]; });
  for (int v : order) potential[g.names[v]] = cert.witness[v];
  return Json{{"value", rational_json(cert.value)},
              {"Y_o", sorted_names(g.names, cert.sources)},
              {"Y_i", sorted_names(g.names, cert.sinks)},
              {"potential", potential},
              {"cover", Json{{"z_o", sparse(cert.cover.out_part)}, {"z_i", sparse(cert.cover.in_part)}}},
              {"cover_cost", rational_json(cert.cover.cost)},
              {"objective", rational_json(cert.objective)},
              {"checks", checks_json(cert.checks)}};
}

Json sink_stable_json(const NamedDigraph& g, const SinkStableResult& result) {
  const BiDigraph b(g.digraph);
  Json circuits = Json::array();
  for (const auto& c : result.circuits) {
    Json nodes = Json::array();
    for (ArcId a : c.arcs) nodes.push_back(g.names[b.arc(a).tail]);
    circuits.push_back(Json{{"nodes", nodes},
                            {"arcs", c.arcs},
                            {"multiplicity", c.multiplicity},
                            {"a_value", a_value(b, c)}});
  }
  return Json{{"value", result.value},
              {"Y", sorted_names(g.names, result.set)},
              {"circuits", circuits},
              {"certificate", certificate_json(g, result.certificate)}};
}

Json clar_fries_json(const plane::PlaneBipartiteGraph& g, const plane::ClarFriesResult& result) {
  Json dual_potential = Json::object();
  for (plane::FaceId f = 0; f < g.face_count(); ++f) {
    dual_potential[g.face(f).id] = result.certificate.witness[f];
  }
  return Json{{"value", rational_json(result.value)},
              {"clockwise", face_names(g, result.clockwise)},
              {"anticlockwise", face_names(g, result.anticlockwise)},
              {"matching", matching_json(g, result.matching)},
              {"dual",
               Json{{"value", rational_json(result.certificate.value)},
                    {"sources", face_names(g, result.certificate.sources)},
                    {"sinks", face_names(g, result.certificate.sinks)},
                    {"potential", dual_potential},
                    {"cover",
                     Json{{"z_o", sparse(result.certificate.cover.out_part)},
                          {"z_i", sparse(result.certificate.cover.in_part)}}},
                    {"cover_cost", rational_json(result.certificate.cover.cost)},
                    {"checks", checks_json(result.certificate.checks)}}}};
}

Json face_set_json(const plane::PlaneBipartiteGraph& g, const plane::FaceSetResult& result) {
  Json out{{"value", result.value},
           {"faces", face_names(g, result.faces)},
           {"matching", matching_json(g, result.matching)}};
  out["detail"] = clar_fries_json(g, result.detail);
  return out;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace sosi::json_io
