#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pentile/linalg.hpp"
#include "pentile/vectype.hpp"

namespace pentile {

enum class AngleKind : std::uint8_t { Corner, Empty, Pi, Unknown };

struct AngleLabel {
  AngleKind kind = AngleKind::Unknown;
  int corner = 0;  // 1..5 when kind == Corner
  bool operator==(const AngleLabel&) const = default;
};

inline AngleLabel angle_corner(int c) { return {AngleKind::Corner, c}; }
inline AngleLabel angle_empty() { return {AngleKind::Empty, 0}; }
inline AngleLabel angle_pi() { return {AngleKind::Pi, 0}; }
inline AngleLabel angle_unknown() { return {AngleKind::Unknown, 0}; }

using VertexId = int;
using HalfEdgeId = int;
using FaceId = int;

enum class Violation {
  None,
  NormalFaceShape,
  EdgeFaceParity,
  SpecialFaceLabel,
  TwoUnknownsAtVertex,
  TwoPiAtVertex,
  RunEmptyCount,
  CompleteFaceShape,
  NoDominatingType,
  CompleteVertexNotInX,
  Disconnected,
  NonCompleteFaceCount,
  MergeStructure,
  MergeCreatesViolation,
  LabelClash,
  AmbiguousCompletion,
  LengthInfeasible,
};

const char* violation_name(Violation v);

struct CheckResult {
  Violation violation = Violation::None;
  VertexId vertex = -1;
  FaceId face = -1;
  bool ok() const { return violation == Violation::None; }
};

// A maximal stretch of Empty/Pi angles along one special face, together with
// its flanking corners. Corners are half-edge handles: the corner of face(h)
// at origin(h). Cyclic runs cover a whole complete face.
struct Run {
  FaceId face = -1;
  bool cyclic = false;
  // Non-cyclic: [flank, interior..., flank]; cyclic: all corners in face
  // order. Interior corners are Empty or Pi.
  std::vector<HalfEdgeId> corners;
};

// Embedded planar half-edge graph for the tiling search. Normal faces are
// tiles; special faces are frontiers or the single unknown region. Purely
// combinatorial: all metric reasoning lives in the side-length program.
class TilingGraph {
 public:
  struct HalfEdge {
    VertexId origin = -1;
    HalfEdgeId twin = -1, next = -1, prev = -1;
    FaceId face = -1;
    int edge_label = 0;  // 1..5
    AngleLabel angle;    // corner of `face` at `origin`
    bool alive = true;
  };
  struct Vertex {
    HalfEdgeId out = -1;
    bool alive = true;
  };
  struct Face {
    HalfEdgeId rep = -1;
    bool normal = false;
    bool alive = true;
  };

  std::vector<HalfEdge> halfedges;
  std::vector<Vertex> vertices;
  std::vector<Face> faces;

  HalfEdgeId head_of(HalfEdgeId h) const { return halfedges[halfedges[h].twin].origin; }
  // Outgoing half-edges around a vertex, in rotational order.
  std::vector<HalfEdgeId> outgoing(VertexId v) const;
  std::vector<HalfEdgeId> face_cycle(FaceId f) const;

  int vertex_count() const;
  int edge_count() const;
  int face_count() const;
  int tile_count() const;

  bool face_complete(FaceId f) const;  // special face without Unknown angles
  FaceId noncomplete_face() const;     // -1 when absent

  VecType vect_of(VertexId v) const;  // corner counts (multiplier-free)
  bool has_pi(VertexId v) const;
  bool is_complete_vertex(VertexId v) const;
  VecType cvect_of(VertexId v) const;  // doubled when a Pi angle is adjacent

  std::string serialize() const;
  static TilingGraph deserialize(const std::string& text);
};

// One placed tile: the single pentagonal normal face plus the unknown outer
// region with five Unknown angles.
TilingGraph initial_graph();

CheckResult check_invariants(const TilingGraph& g, const VecTypeSet& xs);

// All maximal runs, deterministic order: complete faces give one cyclic run,
// the non-complete face gives flanked chains.
std::vector<Run> find_runs(const TilingGraph& g);

// Coefficient vector of the signed distance from the first to the last run
// vertex, in side-length units: Empty angles fold the direction back, Pi
// angles continue straight. Cyclic runs yield the face closure expression.
RatVec run_distance(const TilingGraph& g, const Run& run);

// Same walk with an explicit initial direction (used by consistency checks).
RatVec run_distance_directed(const TilingGraph& g, const Run& run, int initial_dir);

// Merges the two endpoint vertices of a non-cyclic run whose separation the
// caller has established to be zero; splits off a complete special face.
// Returns the violation that makes the merge illegal, if any.
std::optional<Violation> merge_run_endpoints(TilingGraph& g, const Run& run);

// Convenience: locate a run with these endpoints, then merge.
std::optional<Violation> merge_vertices(TilingGraph& g, VertexId v, VertexId w);

struct Attachment {
  HalfEdgeId wedge = -1;   // the Unknown corner half-edge at the host vertex
  bool share_outgoing = true;  // glue along the wedge's outgoing flank
  int corner = 1;          // corner label placed at the host vertex
  bool ascending = true;   // label order along the new face walk
  int shared_edge_label = 0;  // forced label of the glued edge (consistency)
};

// Every way to glue one pentagon at a non-complete vertex, pre-filtered by
// check_invariants on the immediate result.
std::vector<Attachment> enumerate_attachments(const TilingGraph& g, VertexId w,
                                              const VecTypeSet& xs);

// Applies one attachment; LabelClash when the descriptor's shared-edge label
// disagrees with the label forced by corner and orientation.
std::optional<Violation> add_face(TilingGraph& g, const Attachment& at);

// Both completion rules to a fixed point: Unknown -> Empty when the corrected
// type is already in X, Unknown -> Pi when doubling lands in X. Ambiguous
// vertices report a violation. Faces cannot close here, so the length
// program is not consulted; it is kept for interface parity and asserts.
std::optional<Violation> complete_vertices(TilingGraph& g, const VecTypeSet& xs);

}  // namespace pentile
