#include "heegaard/surface.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace heegaard {

int paired_side(int side) {
  return side < 4 ? (side + 2) % 4 : 4 + (side - 2) % 4;
}

int side_class(int side) { return side % 2 + (side < 4 ? 0 : 2); }

BoundaryPoint glue_point(const BoundaryPoint& p) {
  return {paired_side(p.side), Rational(1) - p.t};
}

namespace {

// Octagon vertices, counterclockwise; side k runs V_k -> V_{k+1}.
const int kVx[8] = {2, 2, 1, -1, -2, -2, -1, 1};
const int kVy[8] = {-1, 1, 2, 2, 1, -1, -2, -2};

std::string describe_point(const BoundaryPoint& p) {
  std::ostringstream os;
  os << "(" << p.side << "," << p.t.str() << ")";
  return os.str();
}

bool param_in_range(const Rational& t) {
  return Rational(0) < t && t < Rational(1);
}

std::vector<BoundaryPoint> all_points(const ChordCurve& c) {
  std::vector<BoundaryPoint> pts;
  for (const Chord& ch : c.chords) {
    pts.push_back(ch.from);
    pts.push_back(ch.to);
  }
  return pts;
}

}  // namespace

void point_xy(const BoundaryPoint& p, Rational& x, Rational& y) {
  int k = p.side, k1 = (p.side + 1) % 8;
  x = Rational(kVx[k]) + p.t * Rational(kVx[k1] - kVx[k]);
  y = Rational(kVy[k]) + p.t * Rational(kVy[k1] - kVy[k]);
}

namespace {

PlanePoint boundary_xy(const BoundaryPoint& p) {
  PlanePoint q;
  point_xy(p, q.x, q.y);
  return q;
}

// Chord as the polyline it draws: endpoint, interior bends, endpoint.
std::vector<PlanePoint> polyline(const Chord& ch) {
  std::vector<PlanePoint> pts;
  pts.push_back(boundary_xy(ch.from));
  pts.insert(pts.end(), ch.bends.begin(), ch.bends.end());
  pts.push_back(boundary_xy(ch.to));
  return pts;
}

enum class SegRel { kDisjoint, kCross, kTouch };

// p collinear with (a, b); true when p lies on the closed segment.
bool on_segment(const PlanePoint& a, const PlanePoint& b,
                const PlanePoint& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Exact relation of two closed segments: strict transverse crossing,
// touching contact (endpoint on the other segment, collinear overlap), or
// disjoint.
SegRel segment_relation(const PlanePoint& a, const PlanePoint& b,
                        const PlanePoint& c, const PlanePoint& d) {
  int d1 = orient(a.x, a.y, b.x, b.y, c.x, c.y);
  int d2 = orient(a.x, a.y, b.x, b.y, d.x, d.y);
  int d3 = orient(c.x, c.y, d.x, d.y, a.x, a.y);
  int d4 = orient(c.x, c.y, d.x, d.y, b.x, b.y);
  if (d1 * d2 < 0 && d3 * d4 < 0) return SegRel::kCross;
  if (d1 == 0 && on_segment(a, b, c)) return SegRel::kTouch;
  if (d2 == 0 && on_segment(a, b, d)) return SegRel::kTouch;
  if (d3 == 0 && on_segment(c, d, a)) return SegRel::kTouch;
  if (d4 == 0 && on_segment(c, d, b)) return SegRel::kTouch;
  return SegRel::kDisjoint;
}

struct ChordRel {
  int cross = 0;
  bool touch = false;
};

ChordRel chord_relation(const Chord& x, const Chord& y) {
  std::vector<PlanePoint> px = polyline(x), py = polyline(y);
  ChordRel r;
  for (size_t i = 0; i + 1 < px.size(); ++i)
    for (size_t k = 0; k + 1 < py.size(); ++k) {
      switch (segment_relation(px[i], px[i + 1], py[k], py[k + 1])) {
        case SegRel::kCross: ++r.cross; break;
        case SegRel::kTouch: r.touch = true; break;
        case SegRel::kDisjoint: break;
      }
    }
  return r;
}

bool strictly_inside_octagon(const PlanePoint& p) {
  for (int k = 0; k < 8; ++k) {
    int k1 = (k + 1) % 8;
    if (orient(Rational(kVx[k]), Rational(kVy[k]), Rational(kVx[k1]),
               Rational(kVy[k1]), p.x, p.y) <= 0)
      return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> validate(const ChordCurve& c) {
  std::vector<std::string> bad;
  if (c.chords.empty()) {
    bad.push_back("curve has no chords");
    return bad;
  }
  size_t n = c.chords.size();
  for (size_t i = 0; i < n; ++i) {
    const Chord& ch = c.chords[i];
    for (const BoundaryPoint* p : {&ch.from, &ch.to}) {
      if (p->side < 0 || p->side > 7)
        bad.push_back("side out of range at " + describe_point(*p));
      else if (!param_in_range(p->t))
        bad.push_back("parameter not strictly inside (0,1) at " +
                      describe_point(*p));
    }
    if (ch.bends.empty() && ch.from.side == ch.to.side)
      bad.push_back("chord " + std::to_string(i) +
                    " is straight with both endpoints on side " +
                    std::to_string(ch.from.side));
  }
  if (!bad.empty()) return bad;
  for (size_t i = 0; i < n; ++i) {
    const Chord& ch = c.chords[i];
    for (const PlanePoint& b : ch.bends)
      if (!strictly_inside_octagon(b))
        bad.push_back("chord " + std::to_string(i) +
                      " has a bend outside the open octagon");
    std::vector<PlanePoint> pts = polyline(ch);
    for (size_t k = 0; k + 1 < pts.size(); ++k)
      if (pts[k] == pts[k + 1])
        bad.push_back("chord " + std::to_string(i) +
                      " has a zero-length segment");
    for (size_t k = 0; k + 2 < pts.size(); ++k)
      if (orient(pts[k].x, pts[k].y, pts[k + 1].x, pts[k + 1].y,
                 pts[k + 2].x, pts[k + 2].y) == 0)
        bad.push_back("chord " + std::to_string(i) + " has a degenerate bend");
  }
  if (!bad.empty()) return bad;
  for (size_t i = 0; i < n; ++i) {
    const BoundaryPoint want = glue_point(c.chords[i].to);
    const BoundaryPoint& got = c.chords[(i + 1) % n].from;
    if (!(want == got))
      bad.push_back("chord " + std::to_string(i) + " exits to " +
                    describe_point(want) + " but next chord starts at " +
                    describe_point(got));
  }
  std::vector<BoundaryPoint> pts = all_points(c);
  std::sort(pts.begin(), pts.end());
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    if (pts[i] == pts[i + 1])
      bad.push_back("boundary point used twice: " + describe_point(pts[i]));
  // Embeddedness: segments of one chord may meet only at a shared bend of
  // adjacent segments; distinct chords may not meet at all.
  for (size_t i = 0; i < n; ++i) {
    std::vector<PlanePoint> pi = polyline(c.chords[i]);
    for (size_t k = 0; k + 1 < pi.size(); ++k)
      for (size_t l = k + 2; l + 1 < pi.size(); ++l)
        if (segment_relation(pi[k], pi[k + 1], pi[l], pi[l + 1]) !=
            SegRel::kDisjoint)
          bad.push_back("chord " + std::to_string(i) + " self-intersects");
    for (size_t j = i + 1; j < n; ++j) {
      ChordRel r = chord_relation(c.chords[i], c.chords[j]);
      if (r.cross || r.touch)
        bad.push_back("chords " + std::to_string(i) + " and " +
                      std::to_string(j) + (r.cross ? " cross" : " touch"));
    }
  }
  return bad;
}

void require_valid(const ChordCurve& c) {
  std::vector<std::string> bad = validate(c);
  if (bad.empty()) return;
  std::string msg = "invalid curve:";
  for (const std::string& b : bad) msg += " " + b + ";";
  throw std::runtime_error(msg);
}

bool shares_boundary_point(const ChordCurve& c1, const ChordCurve& c2) {
  std::vector<BoundaryPoint> p1 = all_points(c1), p2 = all_points(c2);
  for (const BoundaryPoint& a : p1)
    for (const BoundaryPoint& b : p2)
      if (a == b) return true;
  return false;
}

int crossings(const ChordCurve& c1, const ChordCurve& c2) {
  if (shares_boundary_point(c1, c2))
    throw std::runtime_error(
        "curves share a boundary point; crossing count undefined without a "
        "transverse pair of representatives");
  int n = 0;
  for (const Chord& a : c1.chords)
    for (const Chord& b : c2.chords) {
      ChordRel r = chord_relation(a, b);
      if (r.touch)
        throw std::runtime_error(
            "curves touch without crossing; representatives are not in "
            "general position");
      n += r.cross;
    }
  return n;
}

namespace {

struct Transit {
  int cls;   // 0..3
  int sign;  // +1 when entering through the lower-numbered side of the pair
};

std::vector<Transit> transits_of(const ChordCurve& c) {
  require_valid(c);
  std::vector<Transit> ts;
  for (const Chord& ch : c.chords) {
    BoundaryPoint exit = ch.to;
    BoundaryPoint enter = glue_point(exit);
    ts.push_back({side_class(exit.side), enter.side < exit.side ? 1 : -1});
  }
  return ts;
}

}  // namespace

const MeridianSystem kSideA = {1, 3};
const MeridianSystem kSideB = {0, 2};

Word word_of(const ChordCurve& c, const MeridianSystem& m) {
  if (m.cls1 == m.cls2 || m.cls1 < 0 || m.cls1 > 3 || m.cls2 < 0 || m.cls2 > 3)
    throw std::invalid_argument("meridian system needs two distinct classes");
  int lo = std::min(m.cls1, m.cls2), hi = std::max(m.cls1, m.cls2);
  Word w;
  for (const Transit& t : transits_of(c)) {
    if (t.cls == lo)
      w.push_back({1, t.sign});
    else if (t.cls == hi)
      w.push_back({2, t.sign});
  }
  return cyclic_reduce(w);
}

Word word_of_product(const ChordCurve& c) {
  Word w;
  for (const Transit& t : transits_of(c)) {
    switch (t.cls) {
      case 1: w.push_back({1, t.sign}); break;   // b
      case 0: w.push_back({2, t.sign}); break;   // a
      case 3: w.push_back({1, -t.sign}); break;  // d
      case 2: w.push_back({2, -t.sign}); break;  // c
    }
  }
  return cyclic_reduce(w);
}

Word surface_word(const ChordCurve& c) {
  Word w;
  for (const Transit& t : transits_of(c)) w.push_back({t.cls + 1, t.sign});
  return cyclic_reduce(w);
}

namespace {

// All sixteen cyclic rotations of the octagon relator and its inverse.
std::vector<Word> relator_rotations() {
  Word r = parse_word("abABcdCD", 4);
  std::vector<Word> rots;
  for (const Word& w : {r, inverse(r)}) {
    for (size_t k = 0; k < w.size(); ++k) {
      Word rot(w.begin() + k, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + k);
      rots.push_back(rot);
    }
  }
  return rots;
}

}  // namespace

bool surface_group_trivial(const Word& input) {
  static const std::vector<Word> rots = relator_rotations();
  Word w = cyclic_reduce(input);
  // Dehn's algorithm: the relator satisfies C'(1/6), so any nonempty trivial
  // cyclic word contains more than half a relator; replacing that factor by
  // the inverse of the complement strictly shortens the word.
  while (!w.empty()) {
    size_t n = w.size();
    Word dbl = w;
    dbl.insert(dbl.end(), w.begin(), w.end());
    bool replaced = false;
    for (size_t len = std::min<size_t>(n, 8); len >= 5 && !replaced; --len) {
      for (size_t start = 0; start < n && !replaced; ++start) {
        for (const Word& r : rots) {
          bool match = true;
          for (size_t k = 0; k < len; ++k)
            if (!(dbl[start + k] == r[k])) {
              match = false;
              break;
            }
          if (!match) continue;
          Word tail(r.begin() + len, r.end());
          Word next = inverse(tail);
          for (size_t k = start + len; k < start + n; ++k)
            next.push_back(dbl[k]);
          w = cyclic_reduce(next);
          replaced = true;
          break;
        }
      }
    }
    if (!replaced) return false;
  }
  return true;
}

bool null_homotopic_on_surface(const ChordCurve& c) {
  return surface_group_trivial(surface_word(c));
}

namespace {

// Smallest spacing among parameters sharing a side, and to the corners.
Rational min_side_gap(const std::vector<BoundaryPoint>& pts) {
  Rational best(1);
  for (int side = 0; side < 8; ++side) {
    std::vector<Rational> ts;
    for (const BoundaryPoint& p : pts)
      if (p.side == side) ts.push_back(p.t);
    std::sort(ts.begin(), ts.end());
    for (size_t i = 0; i < ts.size(); ++i) {
      if (i == 0) best = std::min(best, ts[i]);
      if (i + 1 < ts.size()) best = std::min(best, ts[i + 1] - ts[i]);
      if (i + 1 == ts.size()) best = std::min(best, Rational(1) - ts[i]);
    }
  }
  return best;
}

void require_straight(const ChordCurve& c, const char* what) {
  for (const Chord& ch : c.chords)
    if (!ch.bends.empty())
      throw std::invalid_argument(std::string(what) +
                                  " is defined for straight chords only");
}

ChordCurve shifted_copy(const ChordCurve& c, const Rational& delta) {
  ChordCurve out;
  for (const Chord& ch : c.chords) {
    Chord s;
    s.from = {ch.from.side, ch.from.t - delta};
    s.to = {ch.to.side, ch.to.t + delta};
    out.chords.push_back(s);
  }
  out.essential_tag = c.essential_tag;
  return out;
}

}  // namespace

ChordCurve push_off(const ChordCurve& c, int dir) {
  require_valid(c);
  require_straight(c, "push_off");
  if (dir != 1 && dir != -1) throw std::invalid_argument("dir must be +1/-1");
  Rational delta = min_side_gap(all_points(c)) / Rational(4);
  // Attempt count stays small so every denominator fits the exact-predicate
  // headroom of the rational layer.
  for (int attempt = 0; attempt < 8; ++attempt, delta = delta / Rational(2)) {
    ChordCurve copy = shifted_copy(c, dir == 1 ? delta : -delta);
    if (!validate(copy).empty()) continue;
    if (shares_boundary_point(c, copy)) continue;
    if (crossings(c, copy) != 0) continue;
    return copy;
  }
  throw std::runtime_error("push_off found no disjoint parallel copy");
}

ChordCurve reverse_curve(const ChordCurve& c) {
  ChordCurve out;
  out.essential_tag = c.essential_tag;
  for (size_t i = c.chords.size(); i-- > 0;) {
    Chord ch;
    ch.from = c.chords[i].to;
    ch.to = c.chords[i].from;
    ch.bends.assign(c.chords[i].bends.rbegin(), c.chords[i].bends.rend());
    out.chords.push_back(ch);
  }
  return out;
}

ChordCurve locus_crossing_curve(int cls, const Rational& t) {
  if (cls < 0 || cls > 3) throw std::invalid_argument("class out of range");
  if (!param_in_range(t))
    throw std::invalid_argument("parameter must lie strictly inside (0,1)");
  int lo = cls < 2 ? cls : cls + 2;
  int hi = lo + 2;
  ChordCurve c;
  c.chords.push_back({{hi, Rational(1) - t}, {lo, t}});
  return c;
}

namespace {

struct SquarePoint {
  Rational x, y;
};

// Chart of one torus half as the unit square: bottom edge = side base+3,
// top = base+1, right = base+0, left = base+2 (base 0 or 4). The gluing
// (x,0)~(x,1), (0,y)~(1,y) matches the octagon identifications.
BoundaryPoint square_to_side(const SquarePoint& p, int base) {
  if (p.y == Rational(0)) return {base + 3, p.x};
  if (p.y == Rational(1)) return {base + 1, Rational(1) - p.x};
  if (p.x == Rational(1)) return {base + 0, p.y};
  if (p.x == Rational(0)) return {base + 2, Rational(1) - p.y};
  throw std::logic_error("square point not on an edge");
}

ChordCurve torus_curve(const Slope& s, int base) {
  long long p = s.p, q = s.q;
  long long steps = (p < 0 ? -p : p) + q;
  // Basepoint off the lattice: all crossing coordinates then have reduced
  // denominator divisible by 2*steps, never integral.
  Rational x0(1, 2 * steps);
  SquarePoint cur;
  long long dx = q, dy = p;
  if (p > 0)
    cur = {x0, Rational(0)};
  else if (p < 0)
    cur = {x0, Rational(1)};
  else
    cur = {Rational(0), Rational(1, 2)};
  const SquarePoint start = cur;
  ChordCurve out;
  for (long long i = 0; i < steps; ++i) {
    Rational best(0);
    bool have = false;
    auto consider = [&](const Rational& tt) {
      if (tt <= Rational(0)) return;
      if (!have || tt < best) {
        best = tt;
        have = true;
      }
    };
    if (dx > 0) consider((Rational(1) - cur.x) / Rational(dx));
    if (dx < 0) consider((Rational(0) - cur.x) / Rational(dx));
    if (dy > 0) consider((Rational(1) - cur.y) / Rational(dy));
    if (dy < 0) consider((Rational(0) - cur.y) / Rational(dy));
    if (!have) throw std::logic_error("torus walker stalled");
    SquarePoint exit = {cur.x + best * Rational(dx),
                        cur.y + best * Rational(dy)};
    out.chords.push_back(
        {square_to_side(cur, base), square_to_side(exit, base)});
    SquarePoint next = exit;
    if (exit.x == Rational(0) && dx < 0) next.x = Rational(1);
    else if (exit.x == Rational(1) && dx > 0) next.x = Rational(0);
    else if (exit.y == Rational(0) && dy < 0) next.y = Rational(1);
    else if (exit.y == Rational(1) && dy > 0) next.y = Rational(0);
    cur = next;
  }
  if (!(cur.x == start.x && cur.y == start.y))
    throw std::logic_error("torus walker did not close up");
  require_valid(out);
  return out;
}

}  // namespace

ChordCurve curve_T1(const Slope& s) { return torus_curve(s, 0); }
ChordCurve curve_T2(const Slope& s) { return torus_curve(s, 4); }

ChordCurve product_disk_boundary(const Slope& s) {
  if (!(s == Slope{0, 1}))
    throw std::invalid_argument(
        "product disk boundary is provided for slope 0/1 only");
  // Dual arc to the slope-0/1 curve, doubled through the two corner regions
  // where the front and back halves meet. Product word reads y y^-1.
  Rational u(3, 64), v(5, 64);
  ChordCurve c;
  c.chords.push_back({{2, Rational(1) - u}, {4, v}});
  c.chords.push_back({{6, Rational(1) - v}, {0, u}});
  c.essential_tag = "product disk over the 0/1 dual arc";
  require_valid(c);
  return c;
}

namespace {

double approx(const Rational& r) {
  return double(r.num) / double(r.den);
}

// Nearest point on the 1/4096 grid; keeps every later predicate exact while
// the placement itself only has to pass the geometric gates.
PlanePoint snapped(double x, double y) {
  const long long grid = 4096;
  return {Rational(std::llround(x * grid), grid),
          Rational(std::llround(y * grid), grid)};
}

// One frame layout: the boundary of a neighborhood of lam together with one
// disk copy, drawn as both parallel strands of every lam chord, both disk
// copies, and four corner turns around the crossing. The strand offset dl
// and the disk-copy offset dd are signed independently: the glue relations
// never couple them. Corner bends sit a fixed small step into each crossing
// quadrant.
ChordCurve frame_curve(const ChordCurve& lam, const ChordCurve& disk,
                       const Rational& dl, const Rational& dd) {
  const size_t m = lam.chords.size();
  const Chord& dc = disk.chords[0];
  std::vector<PlanePoint> dseg = polyline(dc);
  size_t j = m;
  for (size_t i = 0; i < m; ++i) {
    std::vector<PlanePoint> ls = polyline(lam.chords[i]);
    if (segment_relation(dseg[0], dseg[1], ls[0], ls[1]) == SegRel::kCross)
      j = i;
  }
  if (j == m) return {};
  const BoundaryPoint a = dc.from, b = dc.to;
  const BoundaryPoint pj = lam.chords[j].from, qj = lam.chords[j].to;

  // Crossing point and unit arm directions in doubles; exactness comes from
  // snapping and from the caller's gates, not from this placement.
  double ax = approx(dseg[0].x), ay = approx(dseg[0].y);
  double bx = approx(dseg[1].x), by = approx(dseg[1].y);
  PlanePoint ppt = boundary_xy(pj), qpt = boundary_xy(qj);
  double px = approx(ppt.x), py = approx(ppt.y);
  double qx = approx(qpt.x), qy = approx(qpt.y);
  double det = (bx - ax) * (qy - py) - (by - ay) * (qx - px);
  if (det == 0.0) return {};
  double t = ((px - ax) * (qy - py) - (py - ay) * (qx - px)) / det;
  double xx = ax + t * (bx - ax), xy = ay + t * (by - ay);
  auto arm = [&](double ux, double uy, double& ox, double& oy) {
    double nx = ux - xx, ny = uy - xy;
    double len = std::sqrt(nx * nx + ny * ny);
    ox = nx / len;
    oy = ny / len;
  };
  double pax, pay, pbx, pby, ppx, ppy, pqx, pqy;
  arm(ax, ay, pax, pay);
  arm(bx, by, pbx, pby);
  arm(px, py, ppx, ppy);
  arm(qx, qy, pqx, pqy);
  const double eps = 1.0 / 512.0;
  auto corner = [&](double u1x, double u1y, double u2x, double u2y) {
    return snapped(xx + eps * (u1x + u2x), xy + eps * (u1y + u2y));
  };
  PlanePoint c_bp = corner(pbx, pby, ppx, ppy);
  PlanePoint c_qb = corner(pqx, pqy, pbx, pby);
  PlanePoint c_aq = corner(pax, pay, pqx, pqy);
  PlanePoint c_pa = corner(ppx, ppy, pax, pay);

  auto lam_off = [&](const BoundaryPoint& p, int s) {
    return BoundaryPoint{p.side, s > 0 ? p.t + dl : p.t - dl};
  };
  auto dsk_off = [&](const BoundaryPoint& p, int s) {
    return BoundaryPoint{p.side, s > 0 ? p.t + dd : p.t - dd};
  };
  auto P = [&](size_t i) { return lam.chords[i % m].from; };
  auto Q = [&](size_t i) { return lam.chords[i % m].to; };
  ChordCurve out;
  out.chords.push_back({dsk_off(b, 1), lam_off(pj, 1), {c_bp}});
  for (size_t s = 1; s < m; ++s) {
    size_t i = (j + m - s) % m;
    out.chords.push_back({lam_off(Q(i), -1), lam_off(P(i), 1), {}});
  }
  out.chords.push_back({lam_off(qj, -1), dsk_off(b, -1), {c_qb}});
  out.chords.push_back({dsk_off(a, 1), lam_off(qj, 1), {c_aq}});
  for (size_t s = 1; s < m; ++s) {
    size_t i = (j + s) % m;
    out.chords.push_back({lam_off(P(i), -1), lam_off(Q(i), 1), {}});
  }
  out.chords.push_back({lam_off(pj, -1), dsk_off(a, -1), {c_pa}});
  return out;
}

}  // namespace

ChordCurve band_sum(const ChordCurve& lam, const ChordCurve& disk) {
  require_valid(lam);
  require_valid(disk);
  require_straight(lam, "band_sum");
  require_straight(disk, "band_sum");
  if (disk.chords.size() != 1)
    throw std::invalid_argument("band_sum expects a one-chord disk boundary");
  if (crossings(disk, lam) != 1)
    throw std::invalid_argument(
        "band_sum needs the disk boundary to cross the curve exactly once");

  std::vector<BoundaryPoint> pool = all_points(lam);
  std::vector<BoundaryPoint> dp = all_points(disk);
  pool.insert(pool.end(), dp.begin(), dp.end());
  Rational delta = min_side_gap(pool) / Rational(8);

  // Which strand family runs on which side of lam, and which disk copy faces
  // which half of the crossing, depends on the geometry; search the sign and
  // orientation choices and shrink the offset until the gates pass.
  for (int attempt = 0; attempt < 8; ++attempt, delta = delta / Rational(2)) {
    for (int combo = 0; combo < 16; ++combo) {
      const ChordCurve& lamw = (combo & 4) ? reverse_curve(lam) : lam;
      const ChordCurve& dskw = (combo & 8) ? reverse_curve(disk) : disk;
      Rational dl = (combo & 1) ? delta : -delta;
      Rational dd = (combo & 2) ? delta : -delta;
      ChordCurve out = frame_curve(lamw, dskw, dl, dd);
      if (out.chords.empty()) continue;
      if (!validate(out).empty()) continue;
      if (shares_boundary_point(out, lam)) continue;
      try {
        if (crossings(out, lam) != 0) continue;
      } catch (const std::runtime_error&) {
        continue;  // touching layout; flip or shrink instead
      }
      out.essential_tag =
          "band sum of two disk copies along the surgery curve";
      return out;
    }
  }
  throw std::runtime_error("band_sum found no embedded disjoint splice");
}

Word slope_word(const Slope& s) {
  return canonical_cyclic(word_of_product(curve_T1(s)));
}

}  // namespace heegaard
