#include "heegaard/fixtures.hpp"

namespace heegaard {

namespace {

BoundaryPoint bp(int side, long long num) { return {side, Rational(num, 20)}; }

}  // namespace

ChordCurve lambda1() {
  // Crosses every class once: transits c- d- a+ b-, so the A word reads BA
  // (class ab) and the B word reads Ba (class aB).
  ChordCurve c;
  c.chords.push_back({bp(3, 16), bp(4, 13)});
  c.chords.push_back({bp(6, 7), bp(5, 13)});
  c.chords.push_back({bp(7, 7), bp(2, 4)});
  c.chords.push_back({bp(0, 16), bp(1, 4)});
  require_valid(c);
  return c;
}

ChordCurve lambda2() {
  // Transits c+ d+: A word b, B word b.
  ChordCurve c;
  c.chords.push_back({bp(5, 15), bp(6, 5)});
  c.chords.push_back({bp(4, 15), bp(7, 5)});
  require_valid(c);
  return c;
}

ChordCurve lambda3() {
  // Transits b- a+: A word A, B word a.
  ChordCurve c;
  c.chords.push_back({bp(0, 15), bp(1, 5)});
  c.chords.push_back({bp(3, 15), bp(2, 5)});
  require_valid(c);
  return c;
}

ChordCurve waist() {
  ChordCurve c;
  c.chords.push_back({bp(2, 19), bp(3, 1)});
  c.chords.push_back({bp(1, 19), bp(2, 1)});
  c.chords.push_back({bp(0, 19), bp(1, 1)});
  c.chords.push_back({bp(3, 19), bp(0, 1)});
  c.essential_tag = "separating curve with commutator surface word";
  require_valid(c);
  return c;
}

ChordCurve cross_curve(int cls) {
  return locus_crossing_curve(cls, Rational(9, 20));
}

std::vector<Word> drilled_triple() {
  return {parse_word("ab", 3), parse_word("Bc", 3), parse_word("A", 3)};
}

Automorphism triple_rotation_a() {
  Automorphism f;
  f.rank = 2;
  f.images = {parse_word("ab"), parse_word("A")};
  return f;
}

Automorphism triple_rotation_b() {
  Automorphism f;
  f.rank = 2;
  f.images = {parse_word("aB"), parse_word("a")};
  return f;
}

}  // namespace heegaard
