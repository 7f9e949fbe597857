#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "heegaard/farey.hpp"
#include "heegaard/rational.hpp"
#include "heegaard/words.hpp"

namespace heegaard {

// Closed genus-2 surface as a regular octagon with side identification word
// a b a^-1 b^-1 c d c^-1 d^-1. Sides 0..7 run counterclockwise; side k goes
// from vertex V_k to V_{k+1}. The gluing sends (side, t) to (partner, 1-t).
// Side classes: 0/2 = a, 1/3 = b, 4/6 = c, 5/7 = d. All eight corners map to
// the single vertex of the surface; chord endpoints stay off corners.
struct BoundaryPoint {
  int side = 0;
  Rational t;

  friend bool operator==(const BoundaryPoint& p, const BoundaryPoint& q) {
    return p.side == q.side && p.t == q.t;
  }
  friend bool operator!=(const BoundaryPoint& p, const BoundaryPoint& q) {
    return !(p == q);
  }
  // cyclic boundary order
  friend bool operator<(const BoundaryPoint& p, const BoundaryPoint& q) {
    if (p.side != q.side) return p.side < q.side;
    return p.t < q.t;
  }
};

// Interior point of the octagon, for chords that bend away from a straight
// segment (needed by splice boundaries that turn near a crossing).
struct PlanePoint {
  Rational x, y;

  friend bool operator==(const PlanePoint& p, const PlanePoint& q) {
    return p.x == q.x && p.y == q.y;
  }
  friend bool operator!=(const PlanePoint& p, const PlanePoint& q) {
    return !(p == q);
  }
};

// One interior arc: straight boundary-to-boundary segment when bends is
// empty, otherwise the polyline from -> bends... -> to. Both endpoints may
// share a side only when a bend keeps the arc off the boundary.
struct Chord {
  BoundaryPoint from, to;
  std::vector<PlanePoint> bends;

  Chord() = default;
  Chord(BoundaryPoint f, BoundaryPoint t, std::vector<PlanePoint> b = {})
      : from(f), to(t), bends(std::move(b)) {}
};

// Closed curve: cyclic chord sequence; each chord's endpoint glues to the
// next chord's start. essential_tag optionally records an audited reason a
// separating curve is essential (verifiers re-check it on the surface group).
struct ChordCurve {
  std::vector<Chord> chords;
  std::string essential_tag;
};

int paired_side(int side);
int side_class(int side);  // 0=a 1=b 2=c 3=d
BoundaryPoint glue_point(const BoundaryPoint& p);

// Planar octagon coordinates, for exact crossing predicates.
void point_xy(const BoundaryPoint& p, Rational& x, Rational& y);

// All ChordCurve invariants; empty list means valid.
std::vector<std::string> validate(const ChordCurve& c);
void require_valid(const ChordCurve& c);

bool shares_boundary_point(const ChordCurve& c1, const ChordCurve& c2);

// Transverse interior crossing count of the given representatives.
// Throws std::runtime_error if the curves share a boundary point or touch
// without crossing (the pair is then not in general position).
int crossings(const ChordCurve& c1, const ChordCurve& c2);

// Handlebody model: two side-pair classes bound disks; crossing the lower
// designated class reads generator 1, the higher reads generator 2, sign +1
// when the curve enters through the lower-numbered side of the pair.
struct MeridianSystem {
  int cls1 = 1, cls2 = 3;  // defaults to the A-side system {b, d}
};
extern const MeridianSystem kSideA;  // {b, d}
extern const MeridianSystem kSideB;  // {a, c}

// Cyclically reduced word of the curve in the handlebody's rank-2 free group.
Word word_of(const ChordCurve& c, const MeridianSystem& m);

// F x I model (F = once-punctured torus, doubled): every transit emits,
// b -> x^s, a -> y^s, d -> x^-s, c -> y^-s with s = +1 when entering through
// the lower-numbered side. Trivial word = bounds a disk in the product.
Word word_of_product(const ChordCurve& c);

// One letter per transit in the genus-2 surface group presentation
// <a,b,c,d | a b a^-1 b^-1 c d c^-1 d^-1>.
Word surface_word(const ChordCurve& c);
// Dehn's algorithm for that presentation (C'(1/6), relator length 8).
bool surface_group_trivial(const Word& w);

// Curve is null-homotopic on the surface iff its surface word is trivial.
bool null_homotopic_on_surface(const ChordCurve& c);

// Parallel copy on one side (dir = +1 or -1): exit parameters shift by
// +dir*delta, entry parameters by -dir*delta (glue-consistent). Offset is
// derived from the smallest same-side gap and halved on collision.
// Only defined for curves made of straight chords.
ChordCurve push_off(const ChordCurve& c, int dir);

// Same curve traversed in the opposite direction.
ChordCurve reverse_curve(const ChordCurve& c);

// One-chord closed curve crossing the locus of the given class once, at
// parameter t on the lower side of the pair: chord (hi, 1-t) -> (lo, t).
ChordCurve locus_crossing_curve(int cls, const Rational& t);

// Slope p/q curve in the torus square chart of the front half (sides 0..3):
// square line of direction (q, p) through a basepoint chosen off the lattice.
// curve_T2 is the same construction on sides 4..7. Words come out Christoffel.
ChordCurve curve_T1(const Slope& s);
ChordCurve curve_T2(const Slope& s);

// Boundary of the product disk (dual arc) x I over slope 0/1: a two-chord
// curve with trivial product word, disjoint from curve_T1(0/1), curve_T2(0/1)
// and their push-offs. Other slopes are not provided; family generators pin
// the slopes that need product disks to 0/1.
ChordCurve product_disk_boundary(const Slope& s);

// Boundary of the band sum of two parallel copies of the disk bounded by
// `disk` along `lam`; requires crossings(disk, lam) == 1. Equivalently the
// boundary of a neighborhood of lam with one disk copy, so the output is
// embedded, disjoint from lam, and its words are commutators of the input
// words: the disk's bounding side is kept. Throws when no embedded layout
// is found.
ChordCurve band_sum(const ChordCurve& lam, const ChordCurve& disk);

// Christoffel word of a slope (|p| letters x, q letters y), same conjugacy
// class as word_of_product(curve_T1(s)). Generators are letters 1 and 2.
Word slope_word(const Slope& s);

}  // namespace heegaard
