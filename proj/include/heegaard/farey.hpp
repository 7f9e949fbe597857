#pragma once

#include <optional>
#include <string>

namespace heegaard {

// Slope p/q in lowest terms with q >= 0; infinity is 1/0. The zero slope is
// 0/1; "0/0" is rejected.
struct Slope {
  long long p = 0;
  long long q = 1;

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
  friend bool operator<(const Slope& a, const Slope& b) {
    if (a.q != b.q) return a.q < b.q;
    return a.p < b.p;
  }
};

Slope make_slope(long long p, long long q);
Slope parse_slope(const std::string& s);  // "p/q", "p", or "inf"
std::string format_slope(const Slope& s);

// Distance-one relation: |p1 q2 - q1 p2| == 1.
bool farey_adjacent(const Slope& a, const Slope& b);

// Graph distance in the Farey tessellation (vertices = slopes, edges =
// adjacency). Computed by a unimodular change of coordinates sending the
// first slope to infinity followed by continued-fraction descent.
int farey_distance(const Slope& a, const Slope& b);

// A slope adjacent to both inputs, if one exists; smallest denominator then
// smallest numerator when there is a choice. Inputs must differ.
std::optional<Slope> common_neighbor(const Slope& a, const Slope& b);

}  // namespace heegaard
