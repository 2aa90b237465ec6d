#include "pentile/render.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <sstream>

namespace pentile {

std::string Snapshot::serialize() const {
  std::ostringstream os;
  os << "pentile-snapshot 1\n";
  os << "vectypes " << xs.size() << '\n';
  for (const auto& v : xs) os << v.to_string() << '\n';
  os << "qrows " << q.sys.rows.size() << '\n';
  for (const auto& r : q.sys.rows) {
    os << static_cast<int>(r.kind);
    for (const auto& c : r.coeffs) os << ' ' << rat_str(c);
    os << ' ' << rat_str(r.rhs) << '\n';
  }
  os << g.serialize();
  return os.str();
}

Snapshot Snapshot::deserialize(const std::string& text) {
  std::istringstream is(text);
  std::string magic, word;
  int version = 0;
  is >> magic >> version;
  if (magic != "pentile-snapshot" || version != 1)
    throw std::runtime_error("unrecognized snapshot format");
  Snapshot snap;
  size_t n = 0;
  is >> word >> n;
  if (word != "vectypes") throw std::runtime_error("snapshot: expected vectypes");
  for (size_t i = 0; i < n; ++i) {
    std::string tok;
    is >> tok;
    snap.xs.insert(VecType::parse(tok));
  }
  is >> word >> n;
  if (word != "qrows") throw std::runtime_error("snapshot: expected qrows");
  snap.q.sys = LinearSystem(5);
  for (size_t i = 0; i < n; ++i) {
    int kind = 0;
    is >> kind;
    RatVec coeffs(5);
    std::string tok;
    for (int j = 0; j < 5; ++j) {
      is >> tok;
      coeffs[j] = parse_rational(tok);
    }
    is >> tok;
    snap.q.sys.add(std::move(coeffs), parse_rational(tok), static_cast<RowKind>(kind));
  }
  std::string rest((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  size_t start = rest.find("pentile-graph");
  if (start == std::string::npos) throw std::runtime_error("snapshot: missing graph");
  snap.g = TilingGraph::deserialize(rest.substr(start));
  return snap;
}

namespace {

using Complex = std::complex<double>;

double to_double(const Rational& r) {
  return static_cast<double>(numerator(r).convert_to<double>() /
                             denominator(r).convert_to<double>());
}

double to_double(const AlgebraicReal& a) {
  RationalInterval enc = a.enclosure(60);
  return to_double((enc.lo + enc.hi) / 2);
}

struct Layout {
  std::map<VertexId, Complex> pos;
  std::map<FaceId, std::vector<Complex>> outlines;  // per normal face, cycle order
};

}  // namespace

std::string render_svg(const Snapshot& snap, const RenderOptions& opts) {
  const TilingGraph& g = snap.g;
  AnglePolytope p = polytope(snap.xs, /*ordered=*/false);

  std::array<Rational, 5> alpha{};
  if (auto a0 = unique_alpha(p)) {
    alpha = *a0;
  } else {
    auto interior = p.interior_point();
    if (!interior) throw InfeasibleSnapshotError("angle polytope has no interior point");
    for (int i = 0; i < 5; ++i) alpha[i] = (*interior)[i];
  }
  ClosureWitness wit;
  if (closure_feasible_at(alpha, snap.q, &wit) != Certificate::Feasible)
    throw InfeasibleSnapshotError("no side-length witness satisfies the program");

  TurningVector tv = turning(alpha);
  std::array<double, 5> len{}, dir{};
  for (int i = 0; i < 5; ++i) {
    len[i] = to_double(wit.lengths[i]);
    dir[i] = to_double(tv.s[i]) * M_PI;
  }
  // canonical outline, corner k (1-based) at canon[k-1]
  std::array<Complex, 5> canon{};
  Complex cur(0, 0);
  for (int i = 0; i < 5; ++i) {
    canon[i] = cur;
    cur += std::polar(len[i], dir[i]);
  }

  // chirality per normal face: ascending corner labels use the outline as is,
  // descending ones use its mirror image
  auto face_points = [&](FaceId f, bool& ascending) {
    auto cycle = g.face_cycle(f);
    int a = g.halfedges[cycle[0]].angle.corner;
    int b = g.halfedges[cycle[1]].angle.corner;
    ascending = (b - a + 5) % 5 == 1;
    std::vector<Complex> pts;
    for (HalfEdgeId h : cycle) {
      Complex c = canon[g.halfedges[h].angle.corner - 1];
      pts.push_back(ascending ? c : std::conj(c));
    }
    return pts;
  };

  Layout layout;
  std::vector<FaceId> normals;
  for (FaceId f = 0; f < static_cast<FaceId>(g.faces.size()); ++f)
    if (g.faces[f].alive && g.faces[f].normal) normals.push_back(f);
  if (normals.empty()) throw InfeasibleSnapshotError("snapshot has no tiles");

  std::map<FaceId, bool> placed;
  // seed: first tile in canonical pose
  {
    bool asc = true;
    auto pts = face_points(normals[0], asc);
    auto cycle = g.face_cycle(normals[0]);
    for (size_t i = 0; i < cycle.size(); ++i)
      layout.pos[g.halfedges[cycle[i]].origin] = pts[i];
    layout.outlines[normals[0]] = pts;
    placed[normals[0]] = true;
  }

  auto place_normal = [&](FaceId f) -> bool {
    auto cycle = g.face_cycle(f);
    bool asc = true;
    auto pts = face_points(f, asc);
    for (size_t i = 0; i < cycle.size(); ++i) {
      VertexId u = g.halfedges[cycle[i]].origin;
      VertexId v = g.halfedges[cycle[(i + 1) % cycle.size()]].origin;
      auto iu = layout.pos.find(u), iv = layout.pos.find(v);
      if (iu == layout.pos.end() || iv == layout.pos.end()) continue;
      Complex num = iv->second - iu->second;
      Complex den = pts[(i + 1) % pts.size()] - pts[i];
      if (std::abs(den) < 1e-12 || std::abs(num) < 1e-12) continue;
      Complex rot = num / den;
      rot /= std::abs(rot);  // guard drift, |rot| == 1 up to rounding
      Complex shift = iu->second - rot * pts[i];
      std::vector<Complex> world(pts.size());
      for (size_t k = 0; k < pts.size(); ++k) world[k] = rot * pts[k] + shift;
      for (size_t k = 0; k < cycle.size(); ++k) {
        VertexId vid = g.halfedges[cycle[k]].origin;
        auto it = layout.pos.find(vid);
        if (it == layout.pos.end()) layout.pos[vid] = world[k];
      }
      layout.outlines[f] = world;
      return true;
    }
    return false;
  };

  // collinear placement through complete special faces
  auto place_special = [&](FaceId f) -> bool {
    if (!g.face_complete(f)) return false;
    auto cycle = g.face_cycle(f);
    // 1d offsets of each cycle vertex along the frontier line
    std::vector<double> offset(cycle.size(), 0.0);
    double pos1 = 0.0;
    int fold = 1;
    for (size_t i = 0; i < cycle.size(); ++i) {
      offset[i] = pos1;
      pos1 += fold * len[g.halfedges[cycle[i]].edge_label - 1];
      AngleKind k = g.halfedges[cycle[(i + 1) % cycle.size()]].angle.kind;
      if (k == AngleKind::Empty) fold = -fold;
    }
    int i0 = -1, i1 = -1;
    for (size_t i = 0; i < cycle.size(); ++i) {
      VertexId vid = g.halfedges[cycle[i]].origin;
      if (!layout.pos.count(vid)) continue;
      if (i0 < 0) {
        i0 = static_cast<int>(i);
      } else if (std::abs(offset[i] - offset[i0]) > 1e-12 &&
                 std::abs(layout.pos[vid] - layout.pos[g.halfedges[cycle[i0]].origin]) >
                     1e-12) {
        i1 = static_cast<int>(i);
        break;
      }
    }
    if (i0 < 0 || i1 < 0) return false;
    Complex p0 = layout.pos[g.halfedges[cycle[i0]].origin];
    Complex p1 = layout.pos[g.halfedges[cycle[i1]].origin];
    Complex axis = (p1 - p0) / (offset[i1] - offset[i0]);
    bool any = false;
    for (size_t i = 0; i < cycle.size(); ++i) {
      VertexId vid = g.halfedges[cycle[i]].origin;
      if (layout.pos.count(vid)) continue;
      layout.pos[vid] = p0 + axis * (offset[i] - offset[i0]);
      any = true;
    }
    return any;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    for (FaceId f : normals)
      if (!placed[f] && place_normal(f)) {
        placed[f] = true;
        progress = true;
      }
    for (FaceId f = 0; f < static_cast<FaceId>(g.faces.size()); ++f)
      if (g.faces[f].alive && !g.faces[f].normal && place_special(f)) progress = true;
  }
  for (FaceId f : normals)
    if (!placed[f])
      throw InfeasibleSnapshotError("layout did not propagate to every tile");

  // ---- svg emission ----
  double minx = 1e30, miny = 1e30, maxx = -1e30, maxy = -1e30;
  for (const auto& [f, pts] : layout.outlines)
    for (const auto& c : pts) {
      minx = std::min(minx, c.real());
      maxx = std::max(maxx, c.real());
      miny = std::min(miny, c.imag());
      maxy = std::max(maxy, c.imag());
    }
  double s = opts.scale;
  double pad = 0.08 * (maxx - minx + maxy - miny + 2.0);
  auto tx = [&](const Complex& c) { return (c.real() - minx + pad) * s; };
  auto ty = [&](const Complex& c) { return (maxy - c.imag() + pad) * s; };

  std::ostringstream svg;
  svg.setf(std::ios::fixed);
  svg.precision(4);
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << (maxx - minx + 2 * pad) * s << "\" height=\"" << (maxy - miny + 2 * pad) * s
      << "\">\n";
  bool first = true;
  for (FaceId f : normals) {
    const auto& pts = layout.outlines[f];
    svg << "  <polygon points=\"";
    for (size_t i = 0; i < pts.size(); ++i)
      svg << (i ? " " : "") << tx(pts[i]) << ',' << ty(pts[i]);
    svg << "\" fill=\"#f2ede4\" stroke=\"#222\" stroke-width=\""
        << (first ? 2.5 : 1.0) << "\"/>\n";
    if (first) {
      // arrow from the corner labeled 1 to the corner labeled 2
      auto cycle = g.face_cycle(f);
      Complex c1, c2;
      for (size_t i = 0; i < cycle.size(); ++i) {
        int corner = g.halfedges[cycle[i]].angle.corner;
        if (corner == 1) c1 = pts[i];
        if (corner == 2) c2 = pts[i];
      }
      Complex mid = c1 + (c2 - c1) * 0.8;
      svg << "  <line x1=\"" << tx(c1) << "\" y1=\"" << ty(c1) << "\" x2=\"" << tx(mid)
          << "\" y2=\"" << ty(mid) << "\" stroke=\"#b00\" stroke-width=\"2\"/>\n";
      svg << "  <circle cx=\"" << tx(c2) << "\" cy=\"" << ty(c2)
          << "\" r=\"3\" fill=\"#b00\"/>\n";
      first = false;
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace pentile
