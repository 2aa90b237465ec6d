#pragma once

#include <iosfwd>
#include <string>

#include "pentile/certificate.hpp"
#include "pentile/lengths.hpp"
#include "pentile/tiling_graph.hpp"

namespace pentile {

// A reproducible search state: the angle case, the accumulated length
// program, and a tiling graph.
struct Snapshot {
  VecTypeSet xs;
  LengthProgram q;
  TilingGraph g;

  std::string serialize() const;
  static Snapshot deserialize(const std::string& text);
};

struct InfeasibleSnapshotError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RenderOptions {
  double scale = 120.0;  // svg units per side-length sum
};

// Solves one exact (alpha, l) witness for the snapshot's case, lays the tiles
// out by the turning model, and emits SVG. Floating point appears only in
// coordinate emission. Throws InfeasibleSnapshotError when no witness exists.
std::string render_svg(const Snapshot& snap, const RenderOptions& opts = {});

}  // namespace pentile
