#include "doctest.h"

#include <algorithm>
#include <map>
#include <queue>
#include <vector>

#include "heegaard/farey.hpp"

using namespace heegaard;

namespace {

using Node = std::pair<long long, long long>;  // normalized (p, q), q >= 0

Node norm(long long p, long long q) {
  Slope s = make_slope(p, q);
  return {s.p, s.q};
}

// Farey neighbors of (p, q) with both entries bounded by B in magnitude.
// Solutions of |p s - q r| = 1 form two affine families (r0 + k p, s0 + k q).
std::vector<Node> bounded_neighbors(long long p, long long q, long long B) {
  long long r0 = 0, s0 = 0;
  {  // extended gcd: p * s0 - q * r0 = 1
    long long old_r = p, r = q, old_x = 1, x = 0, old_y = 0, y = 1;
    while (r != 0) {
      long long k = old_r / r, t;
      t = old_r - k * r; old_r = r; r = t;
      t = old_x - k * x; old_x = x; x = t;
      t = old_y - k * y; old_y = y; y = t;
    }
    // old_x * p + old_y * q = +-1
    if (old_r < 0) { old_x = -old_x; old_y = -old_y; }
    s0 = old_x;
    r0 = -old_y;
  }
  std::vector<Node> out;
  for (int fam : {1, -1}) {
    long long br = fam * r0, bs = fam * s0;
    // k range keeping |br + k p| <= B and |bs + k q| <= B
    long long lo = -2 * B - 2, hi = 2 * B + 2;
    if (p != 0) {
      long long a = (-B - br), b = (B - br);
      long long k1 = a / p, k2 = b / p;
      lo = std::max(lo, std::min(k1, k2) - 1);
      hi = std::min(hi, std::max(k1, k2) + 1);
    }
    if (q != 0) {
      long long a = (-B - bs), b = (B - bs);
      long long k1 = a / q, k2 = b / q;
      lo = std::max(lo, std::min(k1, k2) - 1);
      hi = std::min(hi, std::max(k1, k2) + 1);
    }
    for (long long k = lo; k <= hi; ++k) {
      long long r = br + k * p, s = bs + k * q;
      if (r == 0 && s == 0) continue;
      if (r < -B || r > B || s < -B || s > B) continue;
      out.push_back(norm(r, s));
    }
  }
  return out;
}

// Breadth-first distances from src to every slope within the bound.
std::map<Node, int> bfs_distances(const Slope& src, long long B) {
  std::map<Node, int> dist;
  std::queue<Node> todo;
  Node s{src.p, src.q};
  dist[s] = 0;
  todo.push(s);
  while (!todo.empty()) {
    Node cur = todo.front();
    todo.pop();
    int d = dist[cur];
    for (const Node& n : bounded_neighbors(cur.first, cur.second, B)) {
      if (dist.count(n)) continue;
      dist[n] = d + 1;
      todo.push(n);
    }
  }
  return dist;
}

// Slopes with |p| <= m and q <= m.
std::vector<Slope> slope_grid(long long m) {
  std::vector<Slope> out;
  out.push_back(Slope{1, 0});
  for (long long q = 1; q <= m; ++q)
    for (long long p = -m; p <= m; ++p) {
      Slope s = make_slope(p, q);
      if (s.p != p || s.q != q) continue;  // not in lowest terms
      out.push_back(s);
    }
  return out;
}

}  // namespace

TEST_CASE("slope normalization") {
  CHECK(make_slope(2, 4) == make_slope(1, 2));
  CHECK(make_slope(-1, -2) == make_slope(1, 2));
  CHECK(make_slope(3, 0) == Slope{1, 0});
  CHECK(make_slope(-7, 0) == Slope{1, 0});
  CHECK(make_slope(0, 5) == Slope{0, 1});
  CHECK_THROWS_AS(make_slope(0, 0), std::invalid_argument);
}

TEST_CASE("slope parsing and printing") {
  CHECK(parse_slope("5/2") == make_slope(5, 2));
  CHECK(parse_slope("-3/7") == make_slope(-3, 7));
  CHECK(parse_slope("4") == make_slope(4, 1));
  CHECK(parse_slope("inf") == Slope{1, 0});
  CHECK(format_slope(parse_slope("6/4")) == "3/2");
  CHECK(format_slope(Slope{1, 0}) == "inf");
  CHECK_THROWS_AS(parse_slope("0/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_slope("x"), std::invalid_argument);
}

TEST_CASE("adjacency is the unimodular pairing") {
  CHECK(farey_adjacent(parse_slope("0/1"), parse_slope("1/0")));
  CHECK(farey_adjacent(parse_slope("0/1"), parse_slope("1/1")));
  CHECK(farey_adjacent(parse_slope("1/2"), parse_slope("1/3")));
  CHECK(!farey_adjacent(parse_slope("0/1"), parse_slope("2/1")));
  CHECK(!farey_adjacent(parse_slope("1/2"), parse_slope("1/2")));
}

TEST_CASE("frozen distances") {
  CHECK(farey_distance(parse_slope("0/1"), parse_slope("0/1")) == 0);
  CHECK(farey_distance(parse_slope("0/1"), parse_slope("1/0")) == 1);
  CHECK(farey_distance(parse_slope("0/1"), parse_slope("5/2")) == 3);
  CHECK(farey_distance(parse_slope("1/0"), parse_slope("5/2")) == 2);
  CHECK(farey_distance(parse_slope("1/2"), parse_slope("1/3")) == 1);
  CHECK(farey_distance(parse_slope("0/1"), parse_slope("13/8")) == 4);
}

TEST_CASE("distance matches breadth-first search on a grid") {
  const long long m = 5;
  const long long B = 8 * m;  // geodesics stay well inside the blown-up window
  std::vector<Slope> grid = slope_grid(m);
  for (const Slope& a : grid) {
    auto dist = bfs_distances(a, B);
    for (const Slope& b : grid) {
      Node key{b.p, b.q};
      REQUIRE(dist.count(key) == 1);
      CHECK_MESSAGE(farey_distance(a, b) == dist[key],
                    (format_slope(a) + " to " + format_slope(b)));
    }
  }
}

TEST_CASE("metric axioms") {
  std::vector<Slope> grid = slope_grid(3);
  for (const Slope& a : grid) {
    CHECK(farey_distance(a, a) == 0);
    for (const Slope& b : grid) {
      int d = farey_distance(a, b);
      CHECK(d == farey_distance(b, a));
      CHECK((d == 0) == (a == b));
      CHECK((d == 1) == farey_adjacent(a, b));
    }
  }
  for (const Slope& a : grid)
    for (const Slope& b : grid)
      for (const Slope& c : grid)
        CHECK(farey_distance(a, c) <=
              farey_distance(a, b) + farey_distance(b, c));
}

TEST_CASE("distance is unimodular-invariant") {
  auto shear = [](const Slope& s) { return make_slope(s.p + s.q, s.q); };
  auto rot = [](const Slope& s) { return make_slope(-s.q, s.p); };
  for (const Slope& a : slope_grid(3))
    for (const Slope& b : slope_grid(3)) {
      int d = farey_distance(a, b);
      CHECK(farey_distance(shear(a), shear(b)) == d);
      CHECK(farey_distance(rot(a), rot(b)) == d);
    }
}

TEST_CASE("common neighbors exist exactly at distance <= 2") {
  CHECK(common_neighbor(parse_slope("0/1"), parse_slope("1/1")) ==
        Slope{1, 0});
  CHECK_THROWS_AS(common_neighbor(parse_slope("1/2"), parse_slope("1/2")),
                  std::invalid_argument);
  std::vector<Slope> grid = slope_grid(4);
  for (const Slope& a : grid)
    for (const Slope& b : grid) {
      if (a == b) continue;
      auto w = common_neighbor(a, b);
      int d = farey_distance(a, b);
      CHECK_MESSAGE(w.has_value() == (d <= 2),
                    (format_slope(a) + " vs " + format_slope(b)));
      if (w) {
        CHECK(farey_adjacent(*w, a));
        CHECK(farey_adjacent(*w, b));
      }
    }
}
