#pragma once

// Perfectly matchable 2-connected bipartite plane graphs given by a
// combinatorial embedding, and the double-weighted Clar-Fries problem solved
// through the source-sink reduction on the planar dual.
//
// Conventions:
//  * A face boundary is a cyclic list of edge sides with the face interior on
//    the left of the traversal. An edge side is forward when it runs S -> T.
//  * G_M orients matching edges into S and all other edges into T.
//  * A face is clockwise for M when its boundary is a one-way circuit of G_M
//    with the face on the right of every arc, anti-clockwise when the face is
//    on the left of every arc.
//  * The dual arc of an edge runs from the face on the left of its G_M arc to
//    the face on the right, so clockwise faces are dual sinks. They receive
//    w1 as sink weight; anti-clockwise faces are dual sources and receive w2.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sosi/digraph.hpp"
#include "sosi/rational.hpp"
#include "sosi/source_sink.hpp"

namespace sosi::plane {

using EdgeId = int;
using FaceId = int;
using EdgeSet = std::vector<EdgeId>;  // sorted
using FaceSet = std::vector<FaceId>;  // sorted

struct EdgeSide {
  EdgeId edge;
  bool forward;  // traverses the edge from its S end to its T end
};

struct Face {
  std::string id;
  std::vector<EdgeSide> boundary;
};

enum class PlaneErrorKind {
  kNonBipartite,
  kBadEdge,
  kBoundaryNotClosed,
  kEdgeSideMismatch,
  kEulerFailure,
  kNotTwoConnected,
  kNoPerfectMatching,
  kBadFace,
};

const char* to_string(PlaneErrorKind kind);

class PlaneError : public InputError {
 public:
  PlaneError(PlaneErrorKind kind, const std::string& what)
      : InputError(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  PlaneErrorKind kind() const { return kind_; }

 private:
  PlaneErrorKind kind_;
};

// Nodes 0..|S|-1 are S, the rest are T.
class PlaneBipartiteGraph {
 public:
  // Validates every standing assumption and finds an initial perfect matching.
  // Edges may list their endpoints in either order. Throws PlaneError.
  PlaneBipartiteGraph(std::vector<std::string> s_names, std::vector<std::string> t_names,
                      const std::vector<std::pair<NodeId, NodeId>>& edges,
                      std::vector<Face> faces, FaceId outer_face);

  int s_count() const { return static_cast<int>(s_names_.size()); }
  int node_count() const { return static_cast<int>(s_names_.size() + t_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  bool in_s(NodeId v) const { return v < s_count(); }
  const std::string& node_name(NodeId v) const {
    return in_s(v) ? s_names_[v] : t_names_[v - s_count()];
  }

  NodeId s_end(EdgeId e) const { return edges_[e].first; }
  NodeId t_end(EdgeId e) const { return edges_[e].second; }
  const Face& face(FaceId f) const { return faces_[f]; }
  FaceId outer_face() const { return outer_; }
  FaceSet inner_faces() const;

  // Face whose boundary contains the given side.
  FaceId side_face(EdgeId e, bool forward) const { return side_face_[e][forward ? 1 : 0]; }
  std::vector<NodeId> face_nodes(FaceId f) const;

  const EdgeSet& initial_matching() const { return initial_matching_; }

 private:
  std::vector<std::string> s_names_, t_names_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
  std::vector<Face> faces_;
  FaceId outer_;
  std::vector<std::array<FaceId, 2>> side_face_;
  EdgeSet initial_matching_;
};

// Augmenting-path bipartite matching in edge order. nullopt if none exists.
std::optional<EdgeSet> find_perfect_matching(int s_count, int t_count,
                                             const std::vector<std::pair<NodeId, NodeId>>& edges);

EdgeSet perfect_matching(const PlaneBipartiteGraph& g);

bool is_perfect_matching(const PlaneBipartiteGraph& g, const EdgeSet& m);

struct MatchingOrientation {
  EdgeSet matching;
  Digraph oriented;  // arc e is edge e
  std::vector<char> forward;  // arc e runs S -> T
};

MatchingOrientation orient_by_matching(const PlaneBipartiteGraph& g, const EdgeSet& m);

struct DualDigraph {
  Digraph digraph;  // node f is face f, arc e crosses edge e
};

DualDigraph planar_dual(const PlaneBipartiteGraph& g, const MatchingOrientation& mo);

struct AlternatingFaces {
  FaceSet clockwise;
  FaceSet anticlockwise;
};

AlternatingFaces alternating_faces(const PlaneBipartiteGraph& g, const EdgeSet& m);

struct ClarFriesResult {
  EdgeSet matching;
  FaceSet clockwise;
  FaceSet anticlockwise;
  Rational value;
  SoSiCertificate certificate;  // on the planar dual
};

// Face weights are indexed by face. `start` picks the matching whose dual is
// solved; any perfect matching gives the same optimum.
ClarFriesResult solve_clar_fries(const PlaneBipartiteGraph& g, const std::vector<Rational>& w1,
                                 const std::vector<Rational>& w2,
                                 const std::optional<EdgeSet>& start = std::nullopt);

struct FaceSetResult {
  std::int64_t value = 0;
  FaceSet faces;
  EdgeSet matching;
  ClarFriesResult detail;
};

FaceSetResult clar_number(const PlaneBipartiteGraph& g);
FaceSetResult fries_number(const PlaneBipartiteGraph& g);

}  // namespace sosi::plane
