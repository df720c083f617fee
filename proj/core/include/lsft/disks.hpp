#pragma once

#include "lsft/algebra.hpp"
#include "lsft/diagram.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace lsft {

// One corner of an immersed disk: the chord, the occupied quadrant (sector
// index in the crossing's rotation order) and its Reeb polarity. Sectors 0
// and 2 — the two quadrants swept counterclockwise starting from an
// over-strand ray — are the positive ones: the boundary arrives there on the
// under strand and leaves on the over strand, so the corner gains the full
// chord length in the action identity.
struct DiskCorner {
  int chord = 0;
  int sector = 0;
  bool positive = false;
  friend auto operator<=>(const DiskCorner&, const DiskCorner&) = default;
};

// An immersed disk with boundary on the projected knot and convex corners,
// recorded by its boundary data. `corners` lists the corners in boundary
// order starting at the positive corner (at the first positive one for
// two-positive disks); the boundary between consecutive corners runs
// straight through every intermediate crossing, so this determines the disk.
// `tpass[j]` is the signed number of base-point passes on the boundary arc
// after corner j (+1 with the knot orientation); `mult` is the face
// multiplicity vector; `sign` the orientation sign with the marked point
// right after the positive corner (after the second one for two-positive
// disks).
struct DiskDescriptor {
  std::vector<DiskCorner> corners;
  std::vector<int> tpass;
  std::vector<int> mult;
  int sign = 1;
  friend auto operator<=>(const DiskDescriptor&, const DiskDescriptor&) = default;
  friend bool operator==(const DiskDescriptor&, const DiskDescriptor&) = default;
};

// All immersed convex-corner disks with a single positive corner at chord i.
// Complete by the action bound: face areas are >= 1, so multiplicities are
// bounded by the chord length. Each candidate boundary loop is accepted via
// the immersion certificate (non-negative winding multiplicities, equal
// interior-wheel defects at every crossing, combinatorial Euler
// characteristic 1) and the exact Stokes identity.
std::vector<DiskDescriptor> enumerate_disks_one_pos(const Diagram& d, int i);

// All disks with two positive corners: the first at chord i (the walk
// start), the second at chord j. Ordered: a disk with positives at distinct
// chords appears once here and once in the transposed call; a disk with both
// positives at chord i appears twice in (i,i), once per ordering.
std::vector<DiskDescriptor> enumerate_disks_two_pos(const Diagram& d, int i, int j);

// Boundary word t^{a_0} q_{i_1} t^{a_1} ... q_{i_k} t^{a_k} of a
// one-positive disk (normalized).
Word disk_word(const DiskDescriptor& u);

// The two arc words of a two-positive disk: first the word from the first
// positive corner to the second, then the word from the second back around.
std::pair<Word, Word> disk_words_two_pos(const DiskDescriptor& u);

}  // namespace lsft
