#include "pentile/tiling_graph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pentile {

namespace {

// Label of the edge between two consecutive corner labels: {i, i+1} -> i.
int pair_label(int a, int b) {
  if (b == a % 5 + 1) return a;
  if (a == b % 5 + 1) return b;
  throw std::logic_error("pair_label: corners not consecutive");
}

int corner_step(int c, int delta) {
  int v = ((c - 1 + delta) % 5 + 5) % 5;
  return v + 1;
}

}  // namespace

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::None: return "None";
    case Violation::NormalFaceShape: return "NormalFaceShape";
    case Violation::EdgeFaceParity: return "EdgeFaceParity";
    case Violation::SpecialFaceLabel: return "SpecialFaceLabel";
    case Violation::TwoUnknownsAtVertex: return "TwoUnknownsAtVertex";
    case Violation::TwoPiAtVertex: return "TwoPiAtVertex";
    case Violation::RunEmptyCount: return "RunEmptyCount";
    case Violation::CompleteFaceShape: return "CompleteFaceShape";
    case Violation::NoDominatingType: return "NoDominatingType";
    case Violation::CompleteVertexNotInX: return "CompleteVertexNotInX";
    case Violation::Disconnected: return "Disconnected";
    case Violation::NonCompleteFaceCount: return "NonCompleteFaceCount";
    case Violation::MergeStructure: return "MergeStructure";
    case Violation::MergeCreatesViolation: return "MergeCreatesViolation";
    case Violation::LabelClash: return "LabelClash";
    case Violation::AmbiguousCompletion: return "AmbiguousCompletion";
    case Violation::LengthInfeasible: return "LengthInfeasible";
  }
  return "?";
}

std::vector<HalfEdgeId> TilingGraph::outgoing(VertexId v) const {
  std::vector<HalfEdgeId> out;
  HalfEdgeId start = vertices[v].out;
  HalfEdgeId h = start;
  do {
    assert(halfedges[h].origin == v);
    out.push_back(h);
    h = halfedges[halfedges[h].prev].twin;
    if (out.size() > halfedges.size())
      throw std::logic_error("outgoing: rotational order corrupt");
  } while (h != start);
  return out;
}

std::vector<HalfEdgeId> TilingGraph::face_cycle(FaceId f) const {
  std::vector<HalfEdgeId> out;
  HalfEdgeId start = faces[f].rep;
  HalfEdgeId h = start;
  do {
    assert(halfedges[h].face == f);
    out.push_back(h);
    h = halfedges[h].next;
    if (out.size() > halfedges.size())
      throw std::logic_error("face_cycle: boundary corrupt");
  } while (h != start);
  return out;
}

int TilingGraph::vertex_count() const {
  int n = 0;
  for (const auto& v : vertices) n += v.alive;
  return n;
}
int TilingGraph::edge_count() const {
  int n = 0;
  for (const auto& h : halfedges) n += h.alive;
  return n / 2;
}
int TilingGraph::face_count() const {
  int n = 0;
  for (const auto& f : faces) n += f.alive;
  return n;
}
int TilingGraph::tile_count() const {
  int n = 0;
  for (const auto& f : faces) n += f.alive && f.normal;
  return n;
}

bool TilingGraph::face_complete(FaceId f) const {
  if (faces[f].normal) return true;
  for (HalfEdgeId h : face_cycle(f))
    if (halfedges[h].angle.kind == AngleKind::Unknown) return false;
  return true;
}

FaceId TilingGraph::noncomplete_face() const {
  for (FaceId f = 0; f < static_cast<FaceId>(faces.size()); ++f)
    if (faces[f].alive && !faces[f].normal && !face_complete(f)) return f;
  return -1;
}

VecType TilingGraph::vect_of(VertexId v) const {
  VecType t;
  for (HalfEdgeId h : outgoing(v))
    if (halfedges[h].angle.kind == AngleKind::Corner)
      ++t[halfedges[h].angle.corner - 1];
  return t;
}

bool TilingGraph::has_pi(VertexId v) const {
  for (HalfEdgeId h : outgoing(v))
    if (halfedges[h].angle.kind == AngleKind::Pi) return true;
  return false;
}

bool TilingGraph::is_complete_vertex(VertexId v) const {
  for (HalfEdgeId h : outgoing(v))
    if (halfedges[h].angle.kind == AngleKind::Unknown) return false;
  return true;
}

VecType TilingGraph::cvect_of(VertexId v) const {
  VecType t = vect_of(v);
  return has_pi(v) ? t.doubled() : t;
}

TilingGraph initial_graph() {
  TilingGraph g;
  g.vertices.resize(5);
  g.halfedges.resize(10);
  g.faces.resize(2);
  g.faces[0] = {0, /*normal=*/true, true};
  g.faces[1] = {5, /*normal=*/false, true};
  for (int i = 0; i < 5; ++i) {
    auto& in = g.halfedges[i];
    in.origin = i;
    in.twin = i + 5;
    in.next = (i + 1) % 5;
    in.prev = (i + 4) % 5;
    in.face = 0;
    in.edge_label = i + 1;
    in.angle = angle_corner(i + 1);

    auto& out = g.halfedges[i + 5];
    out.origin = (i + 1) % 5;
    out.twin = i;
    out.next = (i + 4) % 5 + 5;
    out.prev = (i + 1) % 5 + 5;
    out.face = 1;
    out.edge_label = i + 1;
    out.angle = angle_unknown();

    g.vertices[i].out = i;
  }
  return g;
}

namespace {

// Structural well-formedness; failures here are implementation bugs.
void check_structure(const TilingGraph& g) {
  for (HalfEdgeId h = 0; h < static_cast<HalfEdgeId>(g.halfedges.size()); ++h) {
    const auto& he = g.halfedges[h];
    if (!he.alive) continue;
    const auto& tw = g.halfedges[he.twin];
    if (!tw.alive || tw.twin != h || he.twin == h)
      throw std::logic_error("twin pairing corrupt");
    if (g.halfedges[he.next].prev != h || g.halfedges[he.prev].next != h)
      throw std::logic_error("next/prev inversion corrupt");
    if (g.halfedges[he.next].face != he.face)
      throw std::logic_error("face labels inconsistent along boundary");
    if (g.halfedges[he.next].origin != g.halfedges[he.twin].origin)
      throw std::logic_error("head/origin mismatch");
    if (he.edge_label != tw.edge_label) throw std::logic_error("edge label split");
    if (!g.vertices[he.origin].alive) throw std::logic_error("dead origin");
    if (!g.faces[he.face].alive) throw std::logic_error("dead face");
  }
  int v = g.vertex_count(), e = g.edge_count(), f = g.face_count();
  if (v - e + f != 2) throw std::logic_error("Euler formula violated");
}

bool graph_connected(const TilingGraph& g) {
  HalfEdgeId seed = -1;
  int alive = 0;
  for (HalfEdgeId h = 0; h < static_cast<HalfEdgeId>(g.halfedges.size()); ++h)
    if (g.halfedges[h].alive) {
      if (seed < 0) seed = h;
      ++alive;
    }
  if (seed < 0) return true;
  std::set<HalfEdgeId> seen;
  std::vector<HalfEdgeId> stack{seed};
  while (!stack.empty()) {
    HalfEdgeId h = stack.back();
    stack.pop_back();
    if (!seen.insert(h).second) continue;
    stack.push_back(g.halfedges[h].twin);
    stack.push_back(g.halfedges[h].next);
  }
  return static_cast<int>(seen.size()) == alive;
}

}  // namespace

CheckResult check_invariants(const TilingGraph& g, const VecTypeSet& xs) {
  check_structure(g);
  CheckResult res;

  // every edge splits a normal and a special face
  for (HalfEdgeId h = 0; h < static_cast<HalfEdgeId>(g.halfedges.size()); ++h) {
    const auto& he = g.halfedges[h];
    if (!he.alive) continue;
    if (g.faces[he.face].normal == g.faces[g.halfedges[he.twin].face].normal) {
      res.violation = Violation::EdgeFaceParity;
      return res;
    }
  }

  for (FaceId f = 0; f < static_cast<FaceId>(g.faces.size()); ++f) {
    if (!g.faces[f].alive) continue;
    auto cycle = g.face_cycle(f);
    if (g.faces[f].normal) {
      res.face = f;
      if (cycle.size() != 5) {
        res.violation = Violation::NormalFaceShape;
        return res;
      }
      for (size_t i = 0; i < 5; ++i) {
        const auto& a = g.halfedges[cycle[i]].angle;
        const auto& b = g.halfedges[cycle[(i + 1) % 5]].angle;
        if (a.kind != AngleKind::Corner || b.kind != AngleKind::Corner) {
          res.violation = Violation::NormalFaceShape;
          return res;
        }
        int step = ((b.corner - a.corner) % 5 + 5) % 5;
        if (step != 1 && step != 4) {
          res.violation = Violation::NormalFaceShape;
          return res;
        }
        if (g.halfedges[cycle[i]].edge_label != pair_label(a.corner, b.corner)) {
          res.violation = Violation::NormalFaceShape;
          return res;
        }
      }
      res.face = -1;
    } else {
      for (HalfEdgeId h : cycle) {
        if (g.halfedges[h].angle.kind == AngleKind::Corner) {
          res.violation = Violation::SpecialFaceLabel;
          res.face = f;
          return res;
        }
      }
      if (g.face_complete(f)) {
        int empties = 0;
        for (HalfEdgeId h : cycle)
          empties += g.halfedges[h].angle.kind == AngleKind::Empty;
        if (empties != 2) {
          res.violation = Violation::CompleteFaceShape;
          res.face = f;
          return res;
        }
      }
    }
  }

  for (VertexId v = 0; v < static_cast<VertexId>(g.vertices.size()); ++v) {
    if (!g.vertices[v].alive) continue;
    int unknowns = 0, pis = 0;
    for (HalfEdgeId h : g.outgoing(v)) {
      unknowns += g.halfedges[h].angle.kind == AngleKind::Unknown;
      pis += g.halfedges[h].angle.kind == AngleKind::Pi;
    }
    res.vertex = v;
    if (unknowns > 1) {
      res.violation = Violation::TwoUnknownsAtVertex;
      return res;
    }
    if (pis > 1) {
      res.violation = Violation::TwoPiAtVertex;
      return res;
    }
    VecType cv = g.cvect_of(v);
    bool dominated = false;
    for (const auto& w : xs)
      if (w.dominates(cv)) {
        dominated = true;
        break;
      }
    if (!dominated) {
      res.violation = Violation::NoDominatingType;
      return res;
    }
    if (unknowns == 0 && !xs.contains(cv)) {
      res.violation = Violation::CompleteVertexNotInX;
      return res;
    }
    res.vertex = -1;
  }

  for (const Run& run : find_runs(g)) {
    int empties = 0;
    for (HalfEdgeId h : run.corners)
      empties += g.halfedges[h].angle.kind == AngleKind::Empty;
    if (empties > 2) {
      res.violation = Violation::RunEmptyCount;
      res.face = run.face;
      return res;
    }
  }

  if (!graph_connected(g)) {
    res.violation = Violation::Disconnected;
    return res;
  }

  int noncomplete = 0;
  for (FaceId f = 0; f < static_cast<FaceId>(g.faces.size()); ++f)
    if (g.faces[f].alive && !g.faces[f].normal && !g.face_complete(f)) ++noncomplete;
  if (noncomplete != 1) {
    res.violation = Violation::NonCompleteFaceCount;
    return res;
  }
  return res;
}

std::vector<Run> find_runs(const TilingGraph& g) {
  std::vector<Run> runs;
  for (FaceId f = 0; f < static_cast<FaceId>(g.faces.size()); ++f) {
    if (!g.faces[f].alive || g.faces[f].normal) continue;
    auto cycle = g.face_cycle(f);
    // canonical start: lowest half-edge id
    size_t start = 0;
    for (size_t i = 1; i < cycle.size(); ++i)
      if (cycle[i] < cycle[start]) start = i;
    std::rotate(cycle.begin(), cycle.begin() + start, cycle.end());

    auto is_interior = [&](HalfEdgeId h) {
      AngleKind k = g.halfedges[h].angle.kind;
      return k == AngleKind::Empty || k == AngleKind::Pi;
    };

    if (g.face_complete(f)) {
      bool any = false;
      for (HalfEdgeId h : cycle) any |= is_interior(h);
      if (any) {
        Run run;
        run.face = f;
        run.cyclic = true;
        run.corners = cycle;
        runs.push_back(std::move(run));
      }
      continue;
    }
    // rotate to a non-interior corner so chains never wrap
    size_t anchor = 0;
    while (anchor < cycle.size() && is_interior(cycle[anchor])) ++anchor;
    assert(anchor < cycle.size());
    std::rotate(cycle.begin(), cycle.begin() + anchor, cycle.end());
    size_t n = cycle.size();
    size_t i = 0;
    while (i < n) {
      if (!is_interior(cycle[i])) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < n && is_interior(cycle[j])) ++j;
      Run run;
      run.face = f;
      run.corners.push_back(cycle[i - 1]);  // i >= 1: position 0 is non-interior
      for (size_t k = i; k < j; ++k) run.corners.push_back(cycle[k]);
      run.corners.push_back(cycle[j % n]);
      runs.push_back(std::move(run));
      i = j;
    }
  }
  return runs;
}

RatVec run_distance_directed(const TilingGraph& g, const Run& run, int initial_dir) {
  RatVec d(5, Rational(0));
  int dir = initial_dir;
  size_t edges = run.cyclic ? run.corners.size() : run.corners.size() - 1;
  for (size_t i = 0; i < edges; ++i) {
    HalfEdgeId h = run.corners[i];
    d[g.halfedges[h].edge_label - 1] += Rational(dir);
    // fold at the next corner when its angle is Empty
    if (i + 1 < edges) {
      HalfEdgeId c = run.corners[i + 1];
      if (g.halfedges[c].angle.kind == AngleKind::Empty) dir = -dir;
    }
  }
  return d;
}

RatVec run_distance(const TilingGraph& g, const Run& run) {
  return run_distance_directed(g, run, 1);
}

std::optional<Violation> merge_run_endpoints(TilingGraph& g, const Run& run) {
  if (run.cyclic || run.corners.size() < 3) return Violation::MergeCreatesViolation;
  HalfEdgeId c0 = run.corners.front();
  HalfEdgeId ck1 = run.corners.back();
  if (c0 == ck1) return Violation::MergeCreatesViolation;
  VertexId v0 = g.halfedges[c0].origin;
  VertexId v1 = g.halfedges[ck1].origin;
  if (v0 == v1) return Violation::MergeCreatesViolation;
  if (g.halfedges[c0].angle.kind != AngleKind::Unknown ||
      g.halfedges[ck1].angle.kind != AngleKind::Unknown)
    return Violation::MergeCreatesViolation;
  HalfEdgeId p = g.halfedges[c0].prev;
  if (p == ck1) return Violation::MergeCreatesViolation;  // outer face degenerates

  int interior_empties = 0;
  for (size_t i = 1; i + 1 < run.corners.size(); ++i)
    interior_empties += g.halfedges[run.corners[i]].angle.kind == AngleKind::Empty;
  bool new_pi = interior_empties % 2 == 0;
  if (new_pi && (g.has_pi(v0) || g.has_pi(v1))) return Violation::MergeCreatesViolation;

  HalfEdgeId last_interior = run.corners[run.corners.size() - 2];
  assert(g.halfedges[last_interior].next == ck1);
  FaceId outer = g.halfedges[c0].face;

  // split off the closed face
  FaceId nf = static_cast<FaceId>(g.faces.size());
  g.faces.push_back({c0, /*normal=*/false, true});
  g.halfedges[last_interior].next = c0;
  g.halfedges[c0].prev = last_interior;
  for (size_t i = 0; i + 1 < run.corners.size(); ++i)
    g.halfedges[run.corners[i]].face = nf;
  g.halfedges[c0].angle = new_pi ? angle_pi() : angle_empty();

  // reconnect the outer boundary
  g.halfedges[p].next = ck1;
  g.halfedges[ck1].prev = p;
  g.faces[outer].rep = ck1;

  // identify vertices, keeping the smaller id
  VertexId keep = std::min(v0, v1), gone = std::max(v0, v1);
  for (auto& he : g.halfedges)
    if (he.alive && he.origin == gone) he.origin = keep;
  g.vertices[gone].alive = false;
  g.vertices[keep].out = ck1;
  return std::nullopt;
}

std::optional<Violation> merge_vertices(TilingGraph& g, VertexId v, VertexId w) {
  for (const Run& run : find_runs(g)) {
    if (run.cyclic) continue;
    VertexId a = g.halfedges[run.corners.front()].origin;
    VertexId b = g.halfedges[run.corners.back()].origin;
    if ((a == v && b == w) || (a == w && b == v)) return merge_run_endpoints(g, run);
  }
  return Violation::MergeCreatesViolation;
}

static int attachment_shared_label(const Attachment& at) {
  int s = at.ascending ? 1 : -1;
  // share_outgoing glues the tile edge {w, x4} (corners c and c+s); the other
  // side glues {w, x1} (corners c and c+4s).
  int other = corner_step(at.corner, at.share_outgoing ? s : 4 * s);
  return pair_label(at.corner, other);
}

std::optional<Violation> add_face(TilingGraph& g, const Attachment& at) {
  HalfEdgeId u_h = at.wedge;
  if (at.shared_edge_label != 0 &&
      at.shared_edge_label != attachment_shared_label(at))
    return Violation::LabelClash;
  if (g.halfedges[u_h].angle.kind != AngleKind::Unknown)
    return Violation::MergeCreatesViolation;
  VertexId w = g.halfedges[u_h].origin;
  HalfEdgeId p = g.halfedges[u_h].prev;
  FaceId outer = g.halfedges[u_h].face;

  VertexId nv0 = static_cast<VertexId>(g.vertices.size());
  for (int i = 0; i < 4; ++i) g.vertices.push_back({-1, true});
  HalfEdgeId h0 = static_cast<HalfEdgeId>(g.halfedges.size());
  g.halfedges.resize(h0 + 10);
  FaceId nf = static_cast<FaceId>(g.faces.size());
  g.faces.push_back({-1, /*normal=*/true, true});

  // outer chain o[0..4] walks from w back to w; inner twins t[j] bound the
  // new tile. Chain vertex k (1-based) is nv0+k-1.
  HalfEdgeId o[5], t[5];
  for (int j = 0; j < 5; ++j) {
    o[j] = h0 + j;
    t[j] = h0 + 5 + j;
  }
  auto& H = g.halfedges;
  // chain origins: o[0]: w -> x1, o[j]: xj -> x(j+1), o[4]: x4 -> w
  for (int j = 0; j < 5; ++j) {
    H[o[j]].origin = j == 0 ? w : nv0 + j - 1;
    H[o[j]].twin = t[j];
    H[t[j]].twin = o[j];
    H[o[j]].face = outer;
    H[t[j]].face = nf;
    H[o[j]].alive = H[t[j]].alive = true;
    H[o[j]].next = j < 4 ? o[j + 1] : -1;
    H[o[j]].prev = j > 0 ? o[j - 1] : -1;
  }
  for (int j = 0; j < 4; ++j) H[t[j]].origin = nv0 + j;
  H[t[4]].origin = w;
  // inner cycle runs against the chain: t[4] -> t[3] -> ... -> t[0] -> t[4]
  for (int j = 4; j >= 0; --j) {
    H[t[j]].next = j > 0 ? t[j - 1] : t[4];
    H[t[j]].prev = j < 4 ? t[j + 1] : t[0];
  }
  g.faces[nf].rep = t[4];

  // splice into the outer boundary between p and u_h
  H[p].next = o[0];
  H[o[0]].prev = p;
  H[o[4]].next = u_h;
  H[u_h].prev = o[4];

  // angles: the sliver sits on the side we share along
  if (at.share_outgoing) {
    // glued edge is the chain's last edge (x4 == collinear with u_h's ray)
    H[u_h].angle = angle_empty();
    H[o[0]].angle = angle_unknown();  // reduced wedge at w
  } else {
    H[o[0]].angle = angle_empty();  // sliver against p's ray
    // u_h keeps its Unknown label
  }
  for (int j = 1; j < 5; ++j) H[o[j]].angle = angle_unknown();

  // tile corners:走 the inner cycle from w
  int c = at.corner;
  int step = at.ascending ? 1 : -1;
  H[t[4]].angle = angle_corner(c);
  H[t[3]].angle = angle_corner(corner_step(c, step));
  H[t[2]].angle = angle_corner(corner_step(c, 2 * step));
  H[t[1]].angle = angle_corner(corner_step(c, 3 * step));
  H[t[0]].angle = angle_corner(corner_step(c, 4 * step));

  for (int j = 0; j < 5; ++j) {
    int a = H[t[j]].angle.corner;
    int b = H[H[t[j]].next].angle.corner;
    int lbl = pair_label(a, b);
    H[t[j]].edge_label = lbl;
    H[o[j]].edge_label = lbl;
  }

  assert(H[o[at.share_outgoing ? 4 : 0]].edge_label == attachment_shared_label(at));

  for (int j = 0; j < 4; ++j) g.vertices[nv0 + j].out = o[j + 1];
  return std::nullopt;
}

std::vector<Attachment> enumerate_attachments(const TilingGraph& g, VertexId w,
                                              const VecTypeSet& xs) {
  std::vector<Attachment> out;
  HalfEdgeId wedge = -1;
  for (HalfEdgeId h : g.outgoing(w))
    if (g.halfedges[h].angle.kind == AngleKind::Unknown) wedge = h;
  if (wedge < 0) return out;

  for (int side = 0; side < 2; ++side) {
    for (int corner = 1; corner <= 5; ++corner) {
      for (int asc = 0; asc < 2; ++asc) {
        Attachment at;
        at.wedge = wedge;
        at.share_outgoing = side == 0;
        at.corner = corner;
        at.ascending = asc == 0;
        TilingGraph probe = g;
        if (add_face(probe, at)) continue;
        if (!check_invariants(probe, xs).ok()) continue;
        at.shared_edge_label = attachment_shared_label(at);
        out.push_back(at);
      }
    }
  }
  return out;
}

// ---- serialization ----------------------------------------------------

std::string TilingGraph::serialize() const {
  std::ostringstream os;
  os << "pentile-graph 1\n";
  os << vertices.size() << ' ' << halfedges.size() << ' ' << faces.size() << '\n';
  for (const auto& v : vertices) os << v.alive << ' ' << v.out << '\n';
  for (const auto& h : halfedges) {
    os << h.alive << ' ' << h.origin << ' ' << h.twin << ' ' << h.next << ' '
       << h.prev << ' ' << h.face << ' ' << h.edge_label << ' '
       << static_cast<int>(h.angle.kind) << ' ' << h.angle.corner << '\n';
  }
  for (const auto& f : faces) os << f.alive << ' ' << f.normal << ' ' << f.rep << '\n';
  return os.str();
}

TilingGraph TilingGraph::deserialize(const std::string& text) {
  std::istringstream is(text);
  std::string magic;
  int version = 0;
  is >> magic >> version;
  if (magic != "pentile-graph" || version != 1)
    throw std::runtime_error("unrecognized graph snapshot format");
  size_t nv = 0, nh = 0, nf = 0;
  is >> nv >> nh >> nf;
  TilingGraph g;
  g.vertices.resize(nv);
  g.halfedges.resize(nh);
  g.faces.resize(nf);
  for (auto& v : g.vertices) is >> v.alive >> v.out;
  for (auto& h : g.halfedges) {
    int kind = 0;
    is >> h.alive >> h.origin >> h.twin >> h.next >> h.prev >> h.face >>
        h.edge_label >> kind >> h.angle.corner;
    h.angle.kind = static_cast<AngleKind>(kind);
  }
  for (auto& f : g.faces) is >> f.alive >> f.normal >> f.rep;
  if (!is) throw std::runtime_error("truncated graph snapshot");
  return g;
}

std::optional<Violation> complete_vertices(TilingGraph& g, const VecTypeSet& xs) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertices.size()); ++v) {
      if (!g.vertices[v].alive) continue;
      HalfEdgeId unknown = -1;
      int pis = 0;
      for (HalfEdgeId h : g.outgoing(v)) {
        if (g.halfedges[h].angle.kind == AngleKind::Unknown) unknown = h;
        pis += g.halfedges[h].angle.kind == AngleKind::Pi;
      }
      if (unknown < 0) continue;
      VecType vect = g.vect_of(v);
      bool half = pis > 0;
      VecType cv = half ? vect.doubled() : vect;
      bool close_full = xs.contains(cv);
      bool close_half = !half && xs.contains(vect.doubled());
      if (close_full && close_half && !half) return Violation::AmbiguousCompletion;
      if (!close_full && !close_half) continue;
      g.halfedges[unknown].angle = close_full ? angle_empty() : angle_pi();
      changed = true;
      // the unknown region itself must stay open
      if (g.face_complete(g.halfedges[unknown].face))
        return Violation::NonCompleteFaceCount;
    }
  }
  return std::nullopt;
}

}  // namespace pentile
