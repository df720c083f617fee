#pragma once

#include "lsft/algebra.hpp"
#include "lsft/rational.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsft {

struct DiagramError : std::runtime_error {
  explicit DiagramError(const std::string& m) : std::runtime_error(m) {}
};

// Endpoint of a chord: plus = the end on the overcrossing strand (higher z).
struct Endpoint {
  int chord = 0;
  bool plus = false;
  static Endpoint over(int c) { return {c, true}; }
  static Endpoint under(int c) { return {c, false}; }
};

// Exact planar point of the resolved layout.
struct Pt {
  Rat x, y;
};

// ---------------------------------------------------------------------------
// Raw inputs.

// Grid: one X and one O marker per row and per column. x_col/o_col list the
// marker column of each row, rows bottom to top, everything 1-based.
// Verticals run X -> O and cross over horizontals; horizontals run O -> X.
struct GridDiagram {
  int size = 0;
  std::vector<int> x_col, o_col;
};

// One event of a front word, left to right. 'L' inserts a strand pair whose
// lower strand lands at `level` (default: above all strands), 'R' closes the
// pair at (level, level+1) (default: the topmost pair), 'X' swaps the strands
// at (level, level+1). Levels are 1-based from the bottom.
struct FrontEvent {
  char kind = 'L';
  int level = 0;  // 0 = default
};
struct FrontWord {
  std::vector<FrontEvent> events;
};

// Planar diagram code: X(a,b,c,d) lists the arcs around a crossing
// counterclockwise starting from the incoming under-arc. Arcs are numbered
// 1..2n in traversal order with the base point on arc 1.
struct PdTuple {
  std::array<int, 4> a{};
};
struct PdCode {
  std::vector<PdTuple> tuples;
  std::optional<int> outer_arc;  // outer face = face beside this arc ...
  bool outer_left = true;        // ... on the left (true) or right of its dart
};

// A parsed input file: exactly one of grid/front/pd is set. `gradings`,
// `rot` and `labels` are optional records (gradings/rot required for pd
// inputs, optional cross-checks otherwise); `labels` maps traversal-order
// chords to the labels used in the output (and in `gradings`); `basepoint`
// moves the base point to the given arc of the default numbering.
struct ParsedInput {
  std::optional<GridDiagram> grid;
  std::optional<FrontWord> front;
  std::optional<PdCode> pd;
  std::optional<std::vector<int>> gradings;
  std::optional<int> rot;
  std::optional<std::vector<int>> labels;
  std::optional<int> basepoint;
};

ParsedInput parse_input(std::istream& in);
ParsedInput parse_input_string(const std::string& text);

// Grid -> front word: rotate the rectilinear loop 45 degrees counterclockwise
// (verticals become descending strands, hence overcrossings — matching the
// verticals-over grid convention) and read cusps and crossings left to right.
FrontWord grid_to_front(const GridDiagram& g);

struct DiagramOptions {
  // Move the base point to this arc of the default numbering (the diagram is
  // renumbered afterwards so that the base-point arc is again the last one).
  // Overrides a basepoint: record in the input.
  std::optional<int> base_point;
  std::uint64_t seed = 1;  // deterministic genericity tie-breaking
};

// ---------------------------------------------------------------------------
// The diagram: an oriented knot traversal with signed crossings, the induced
// rotation system with faces, an exact compatible geometry (chord lengths,
// face areas) and the grading data.

class Diagram {
 public:
  int n() const { return n_; }
  int tb() const { return tb_; }
  int rot() const { return grading_.rot; }
  const Grading& grading() const { return grading_; }
  int sign(int chord) const { return sign_.at(static_cast<std::size_t>(chord)); }
  // Chord lengths (z drop across the crossing), 1-based; entry 0 unused.
  const std::vector<Rat>& lengths() const { return len_; }

  // Traversal from the base point: positions 0..2n-1.
  int visits() const { return 2 * n_; }
  int visit_chord(int pos) const { return vis_chord_.at(static_cast<std::size_t>(pos)); }
  bool visit_over(int pos) const { return vis_over_.at(static_cast<std::size_t>(pos)) != 0; }
  int pos(Endpoint e) const {
    return e.plus ? pos_over_.at(static_cast<std::size_t>(e.chord))
                  : pos_under_.at(static_cast<std::size_t>(e.chord));
  }
  // delta(a, b) = 1 iff b is visited strictly before a walking from the base
  // point. Total: delta(a, b) + delta(b, a) = 1 for a != b.
  int delta(Endpoint a, Endpoint b) const { return pos(b) < pos(a) ? 1 : 0; }

  // Arcs and darts. Arc p runs from visit p to visit p+1 (mod 2n); the base
  // point lies on arc 2n-1. Dart 2p is arc p traversed with the orientation,
  // dart 2p+1 against it.
  int arcs() const { return 2 * n_; }
  int base_arc() const { return 2 * n_ - 1; }
  static int dart(int arc, bool fwd) { return 2 * arc + (fwd ? 0 : 1); }
  static int dart_arc(int d) { return d / 2; }
  static bool dart_fwd(int d) { return (d & 1) == 0; }
  static int dart_reverse(int d) { return d ^ 1; }
  int darts() const { return 4 * n_; }
  int dart_head(int d) const;  // visit position the dart points into
  int dart_tail(int d) const;

  // Rotation system: the four darts leaving the crossing of chord c, in
  // counterclockwise order starting from the outgoing over-dart. Roles:
  // 0 = out-over, 1 = out-under, 2 = in-over, 3 = in-under, where an "in"
  // role denotes the reversal of the arriving dart.
  const std::array<int, 4>& rotation(int chord) const {
    return rotation_.at(static_cast<std::size_t>(chord));
  }
  int role_of_away_dart(int chord, int d) const;

  // Faces: orbits of next(d) = ccw-predecessor of reverse(d) at the head
  // crossing. A face lies on the left of each of its darts; bounded faces are
  // counterclockwise, the outer face is clockwise.
  int face_count() const { return static_cast<int>(face_darts_.size()); }
  int face_of_dart(int d) const { return face_of_dart_.at(static_cast<std::size_t>(d)); }
  const std::vector<int>& face_darts(int f) const {
    return face_darts_.at(static_cast<std::size_t>(f));
  }
  int outer_face() const { return outer_face_; }
  const Rat& area(int f) const { return area_.at(static_cast<std::size_t>(f)); }

  // Corner sectors: sector s at a crossing spans counterclockwise from
  // rotation(c)[s] to rotation(c)[(s+1)%4].
  int sector_face(int chord, int s) const {
    return sector_face_.at(static_cast<std::size_t>(chord)).at(static_cast<std::size_t>(s));
  }
  // Quadrant sign: -1 at the unique sector swept ccw from an in-dart to an
  // out-dart for odd chords, at the out/out sector for even chords.
  int sector_sign(int chord, int s) const {
    return sector_sign_.at(static_cast<std::size_t>(chord)).at(static_cast<std::size_t>(s));
  }
  // Sector bounded ccw by the two given away-darts, or -1.
  int sector_between(int chord, int away_a, int away_b) const;

  // Layout (front and grid inputs): closed polyline of the knot starting at
  // the base point, and the polyline vertex of each visit.
  bool has_layout() const { return has_layout_; }
  const std::vector<Pt>& layout() const { return pts_; }
  const std::vector<int>& visit_vertex() const { return visit_vertex_; }

 private:
  friend Diagram build_diagram(const ParsedInput&, const DiagramOptions&);
  friend struct DiagramBuilder;
  Diagram() = default;

  int n_ = 0;
  int tb_ = 0;
  Grading grading_;
  std::vector<int> sign_;
  std::vector<Rat> len_;
  std::vector<int> vis_chord_;
  std::vector<char> vis_over_;
  std::vector<int> pos_over_, pos_under_;
  std::vector<std::array<int, 4>> rotation_;
  std::vector<int> face_of_dart_;
  std::vector<std::vector<int>> face_darts_;
  std::vector<Rat> area_;
  int outer_face_ = -1;
  std::vector<std::array<int, 4>> sector_face_;
  std::vector<std::array<int, 4>> sector_sign_;
  bool has_layout_ = false;
  std::vector<Pt> pts_;
  std::vector<int> visit_vertex_;
};

Diagram build_diagram(const ParsedInput& in, const DiagramOptions& opt = {});

}  // namespace lsft
