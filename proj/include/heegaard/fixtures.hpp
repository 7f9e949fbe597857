#pragma once

#include "heegaard/surface.hpp"
#include "heegaard/whitehead.hpp"

namespace heegaard {

// Hand-built chord curves for the three-handle family: a genus 2 handlebody
// made of two 0-handles joined by three 1-handles carries three disjoint
// curves lambda1, lambda2, lambda3, cyclically permuted by the 2*pi/3
// rotation of the handle structure. Any two of them form a primitive pair;
// the rotation survives drilling the axis arc out of one 0-handle, where the
// triple becomes a free basis of the rank-3 group.
//
// Words on the two handlebody sides (A meridians {b,d}, B meridians {a,c}):
//   lambda1: ab / aB    lambda2: b / b    lambda3: a / a
// All parameters use denominator 20; curves are pairwise disjoint.
ChordCurve lambda1();
ChordCurve lambda2();
ChordCurve lambda3();

// Separating curve around the middle of the octagon: surface word is the
// commutator baBA (nontrivial), both handlebody words are empty. Tagged
// essential; verifiers re-audit the tag against the surface word.
ChordCurve waist();

// One-chord curve crossing the class locus exactly once at parameter 9/20.
// Crossing counts with the fixtures: cross(a) and cross(b) and cross(c) each
// cross lambda1 once; cross(d) crosses lambda2 once; cross(a) and cross(b)
// miss lambda2.
ChordCurve cross_curve(int cls);

// Words of the triple in the drilled (genus 3) handlebody; a free basis.
// Erasing the third generator recovers the lambda classes ab, b, a.
std::vector<Word> drilled_triple();

// Rank-2 automorphisms cycling the fixture word classes:
// a -> ab, b -> a^-1 cycles [ab] -> [b] -> [a] -> [ab] (A-side words);
// a -> aB, b -> a cycles [a] -> [aB] -> [b] -> [a] (B-side words).
Automorphism triple_rotation_a();
Automorphism triple_rotation_b();

}  // namespace heegaard
