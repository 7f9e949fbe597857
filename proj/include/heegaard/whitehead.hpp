#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heegaard/words.hpp"

namespace heegaard {

// Letter slot in bitmasks: a=0, A=1, b=2, B=3, c=4, C=5, d=6, D=7.
inline int letter_key(const Letter& l) { return 2 * (l.idx - 1) + (l.sign < 0); }
inline Letter letter_from_key(int k) { return Letter(k / 2 + 1, (k % 2) ? -1 : 1); }

// Type II Whitehead automorphism (A, m): m in A, m^-1 not in A. Fixes the
// generator of m; any other letter x maps to
//   x m      if x in A, x^-1 not in A
//   m^-1 x   if x^-1 in A, x not in A
//   m^-1 x m if both are in A
//   x        otherwise.
struct WhiteheadMove {
  uint32_t set = 0;  // bitmask over letter slots
  Letter mult;

  bool contains(const Letter& l) const { return (set >> letter_key(l)) & 1u; }
  Word apply_letter(const Letter& x) const;
  Word apply(const Word& w) const;  // freely reduced image
  WhiteheadMove inverse_move() const;
  std::string describe() const;
};

// Every valid (A, m) for the given rank, including ones acting trivially on
// conjugacy classes; callers filter by effect.
std::vector<WhiteheadMove> all_type2_moves(int rank);

// Generator images defining an endomorphism; all uses here are automorphisms.
struct Automorphism {
  int rank = 2;
  std::vector<Word> images;  // images[i] = image of generator i+1

  static Automorphism identity(int rank);
  Word apply(const Word& w) const;
  // Composition: (f.then(g))(w) = g(f(w)).
  Automorphism then(const Automorphism& g) const;
};

Automorphism move_as_automorphism(const WhiteheadMove& m, int rank);
// Signed generator permutation: gen i+1 -> targets[i] (a letter).
Automorphism permutation_automorphism(int rank, const std::vector<Letter>& targets);

// One step of the primitivity descent, for reporting.
struct DescentStep {
  std::string move;    // human-readable (A, m)
  std::string result;  // cyclic word after the move
};

struct PrimitivityResult {
  bool primitive = false;
  std::vector<DescentStep> trace;  // length-reducing moves applied, in order
};

// Whitehead peak reduction: greedily apply length-reducing type II moves to
// the canonical cyclic form. At a local minimum of length > 1, sweep the
// equal-length orbit (memoized canonical forms) for a further reduction
// before concluding; length 1 at the minimum means primitive.
PrimitivityResult check_primitive(const Word& w, int rank);
bool is_primitive(const Word& w, int rank);

// Descent variant that tracks the automorphism. On success phi maps w to a
// conjugate of a single generator letter; `target` is that letter, and
// phi_inv is the two-sided inverse of phi.
struct TrackedDescent {
  bool primitive = false;
  Automorphism phi;
  Automorphism phi_inv;
  Letter target;
};
TrackedDescent descend_to_generator(const Word& w, int rank);

}  // namespace heegaard
