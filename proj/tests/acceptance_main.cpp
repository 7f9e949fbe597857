// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Oracles are implemented here from scratch so a library defect
// cannot hide behind itself; runtime limits are pinned next to each check.

#include <algorithm>
#include <array>
#include <chrono>
#include <iostream>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "heegaard/distance.hpp"
#include "heegaard/farey.hpp"
#include "heegaard/fixtures.hpp"
#include "heegaard/splittings.hpp"
#include "heegaard/stallings.hpp"
#include "heegaard/whitehead.hpp"

using namespace heegaard;

namespace {

int g_failures = 0;

bool criterion(int id, const std::string& name, double limit_s,
               bool (*fn)(std::string&)) {
  std::string detail;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
  if (limit_s > 0 && secs >= limit_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
  }
  std::ostringstream line;
  line << "C" << id << " " << (ok ? "PASS" : "FAIL") << " " << name << " ("
       << secs << "s";
  if (limit_s > 0) line << " < " << limit_s << "s";
  line << ")";
  if (!detail.empty()) line << " " << detail;
  std::cout << line.str() << "\n";
  if (!ok) ++g_failures;
  return ok;
}

// ---------------------------------------------------------------- criterion 1
// Orbit oracle: primitive conjugacy classes of cyclic length <= cap as the
// breadth-first closure of [a] under independently implemented elementary
// automorphisms. Peak reduction keeps the closure inside the cap.

struct OracleMove {
  unsigned set = 0;  // bitmask over letter keys a=0 A=1 b=2 B=3
  Letter mult;
};

std::vector<OracleMove> oracle_type2_moves() {
  std::vector<OracleMove> out;
  for (int mk = 0; mk < 4; ++mk)
    for (unsigned s = 0; s < 16; ++s) {
      if (!((s >> mk) & 1u)) continue;
      if ((s >> (mk ^ 1)) & 1u) continue;
      out.push_back({s, letter_from_key(mk)});
    }
  return out;
}

Word oracle_apply(const OracleMove& mv, const Word& w) {
  Word out;
  for (const Letter& l : w) {
    Letter g(l.idx, 1);
    Word img;
    if (g.idx == mv.mult.idx) {
      img = {g};
    } else {
      bool in_set = (mv.set >> letter_key(g)) & 1u;
      bool inv_in = (mv.set >> letter_key(g.inv())) & 1u;
      if (in_set && !inv_in) img = {g, mv.mult};
      else if (!in_set && inv_in) img = {mv.mult.inv(), g};
      else if (in_set && inv_in) img = {mv.mult.inv(), g, mv.mult};
      else img = {g};
    }
    if (l.sign < 0) img = inverse(img);
    for (const Letter& x : img) out.push_back(x);
  }
  return reduce(out);
}

Word oracle_permute(const Word& w, const Letter& img_a, const Letter& img_b) {
  Word out;
  for (const Letter& l : w) {
    Letter t = l.idx == 1 ? img_a : img_b;
    out.push_back(Letter(t.idx, t.sign * l.sign));
  }
  return reduce(out);
}

std::set<Word> primitive_orbit(size_t cap) {
  std::set<Word> seen;
  std::queue<Word> todo;
  Word start = canonical_cyclic(parse_word("a"));
  seen.insert(start);
  todo.push(start);
  auto moves = oracle_type2_moves();
  std::vector<std::pair<Letter, Letter>> perms;
  for (int ia : {1, -1})
    for (int ib : {1, -1}) {
      perms.push_back({Letter(1, ia), Letter(2, ib)});
      perms.push_back({Letter(2, ia), Letter(1, ib)});
    }
  while (!todo.empty()) {
    Word w = todo.front();
    todo.pop();
    std::vector<Word> images;
    for (const auto& mv : moves) images.push_back(oracle_apply(mv, w));
    for (const auto& pr : perms)
      images.push_back(oracle_permute(w, pr.first, pr.second));
    for (Word& img : images) {
      Word c = canonical_cyclic(img);
      if (c.empty() || c.size() > cap) continue;
      if (seen.insert(c).second) todo.push(c);
    }
  }
  return seen;
}

void all_reduced(size_t len, Word& cur, std::vector<Word>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (int k = 0; k < 4; ++k) {
    Letter l = letter_from_key(k);
    if (!cur.empty() && cur.back() == l.inv()) continue;
    cur.push_back(l);
    all_reduced(len, cur, out);
    cur.pop_back();
  }
}

bool crit1_primitivity(std::string& detail) {
  const size_t cap = 6;
  std::set<Word> orbit = primitive_orbit(cap);
  std::set<Word> classes;
  for (size_t len = 1; len <= cap; ++len) {
    std::vector<Word> words;
    Word cur;
    all_reduced(len, cur, words);
    for (const Word& w : words) classes.insert(canonical_cyclic(w));
  }
  size_t primitives = 0;
  for (const Word& c : classes) {
    bool lib = is_primitive(c, 2);
    bool ora = orbit.count(c) == 1;
    if (lib != ora) {
      detail = "disagreement on " + format_word(c);
      return false;
    }
    if (lib) ++primitives;
  }
  if (primitives != orbit.size()) {
    detail = "orbit size mismatch";
    return false;
  }
  std::ostringstream s;
  s << classes.size() << " classes, " << primitives << " primitive";
  detail = s.str();
  return true;
}

// ---------------------------------------------------------------- criterion 2
// Independent folding oracle: wedge of labeled paths, fold until no vertex
// has two equal-labeled out-edges, trim hanging trees; a tuple is a basis
// exactly when the result is the one-vertex rose with every label looping.

struct MiniGraph {
  std::set<std::tuple<int, int, int>> edges;  // (from, label key, to)
  int next = 1;

  void path(const Word& w) {
    int at = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      int to = (i + 1 == w.size()) ? 0 : next++;
      int k = letter_key(w[i]);
      edges.insert({at, k, to});
      edges.insert({to, k ^ 1, at});
      at = to;
    }
  }
  void merge(int keep, int gone) {
    std::set<std::tuple<int, int, int>> out;
    for (auto [f, k, t] : edges) {
      if (f == gone) f = keep;
      if (t == gone) t = keep;
      out.insert({f, k, t});
    }
    edges = std::move(out);
  }
  bool fold_once() {
    std::map<std::pair<int, int>, int> seen;
    for (auto [f, k, t] : edges) {
      auto it = seen.find({f, k});
      if (it != seen.end() && it->second != t) {
        merge(std::min(t, it->second), std::max(t, it->second));
        return true;
      }
      seen[{f, k}] = t;
    }
    return false;
  }
  void trim() {
    for (;;) {
      std::map<int, int> deg;
      for (auto [f, k, t] : edges) ++deg[f];
      int victim = -1;
      for (auto [v, d] : deg)
        if (v != 0 && d <= 1) victim = v;
      if (victim < 0) return;
      std::set<std::tuple<int, int, int>> keep;
      for (auto e : edges)
        if (std::get<0>(e) != victim && std::get<2>(e) != victim)
          keep.insert(e);
      edges = std::move(keep);
    }
  }
};

bool fold_basis_tuple(const std::vector<Word>& words, int rank) {
  MiniGraph g;
  for (const Word& w : words) {
    Word r = reduce(w);
    if (r.empty()) return false;
    g.path(r);
  }
  while (g.fold_once()) {
  }
  g.trim();
  std::set<int> verts, keys;
  for (auto [f, k, t] : g.edges) {
    verts.insert(f);
    verts.insert(t);
    keys.insert(k);
  }
  if (verts != std::set<int>{0}) return false;
  if (g.edges.size() != 2 * (size_t)rank) return false;
  return (int)keys.size() == 2 * rank;
}

bool crit2_basis(std::string& detail) {
  std::vector<Word> words;
  for (size_t len = 1; len <= 4; ++len) {
    std::vector<Word> batch;
    Word cur;
    all_reduced(len, cur, batch);
    words.insert(words.end(), batch.begin(), batch.end());
  }
  size_t bases = 0;
  for (const Word& u : words)
    for (const Word& v : words) {
      bool lib = is_basis_tuple({u, v}, 2);
      bool ora = fold_basis_tuple({u, v}, 2);
      if (lib != ora) {
        detail = "disagreement on (" + format_word(u) + ", " + format_word(v) +
                 ")";
        return false;
      }
      if (lib) ++bases;
    }

  // fixture triple: a basis in the drilled group, pairwise bases per side
  std::vector<Word> triple = drilled_triple();
  if (!is_basis_tuple(triple, 3) || !fold_basis_tuple(triple, 3)) {
    detail = "drilled triple is not a basis";
    return false;
  }
  const SideModel side_a{SideKind::Handlebody, kSideA};
  const SideModel side_b{SideKind::Handlebody, kSideB};
  for (const SideModel& side : {side_a, side_b}) {
    std::vector<Word> lam = {side_word(lambda1(), side),
                             side_word(lambda2(), side),
                             side_word(lambda3(), side)};
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) {
        if (i == j) continue;
        if (!is_basis_tuple({lam[i], lam[j]}, 2) ||
            !fold_basis_tuple({lam[i], lam[j]}, 2)) {
          detail = "fixture pair is not a basis";
          return false;
        }
      }
  }
  std::ostringstream s;
  s << words.size() * words.size() << " pairs, " << bases << " bases";
  detail = s.str();
  return true;
}

// ---------------------------------------------------------------- criterion 3
// Breadth-first oracle on the slope graph restricted to |p|,|q| <= 8*grid;
// geodesics between grid slopes run through their convergents, which stay
// well inside that window.

using Node = std::pair<long long, long long>;

Node nnorm(long long p, long long q) {
  Slope s = make_slope(p, q);
  return {s.p, s.q};
}

std::vector<Node> bounded_neighbors(long long p, long long q, long long B) {
  long long r0 = 0, s0 = 0;
  {
    long long old_r = p, r = q, old_x = 1, x = 0, old_y = 0, y = 1;
    while (r != 0) {
      long long k = old_r / r, t;
      t = old_r - k * r; old_r = r; r = t;
      t = old_x - k * x; old_x = x; x = t;
      t = old_y - k * y; old_y = y; y = t;
    }
    if (old_r < 0) { old_x = -old_x; old_y = -old_y; }
    s0 = old_x;
    r0 = -old_y;
  }
  std::vector<Node> out;
  for (int fam : {1, -1}) {
    long long br = fam * r0, bs = fam * s0;
    long long lo = -2 * B - 2, hi = 2 * B + 2;
    if (p != 0) {
      long long k1 = (-B - br) / p, k2 = (B - br) / p;
      lo = std::max(lo, std::min(k1, k2) - 1);
      hi = std::min(hi, std::max(k1, k2) + 1);
    }
    if (q != 0) {
      long long k1 = (-B - bs) / q, k2 = (B - bs) / q;
      lo = std::max(lo, std::min(k1, k2) - 1);
      hi = std::min(hi, std::max(k1, k2) + 1);
    }
    for (long long k = lo; k <= hi; ++k) {
      long long r = br + k * p, s = bs + k * q;
      if (r == 0 && s == 0) continue;
      if (r < -B || r > B || s < -B || s > B) continue;
      out.push_back(nnorm(r, s));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool crit3_farey(std::string& detail) {
  const long long grid = 20, B = 8 * grid;
  std::map<Node, int> index;
  std::vector<Node> nodes;
  auto add = [&](long long p, long long q) {
    Node n = nnorm(p, q);
    if (index.emplace(n, (int)nodes.size()).second) nodes.push_back(n);
  };
  add(1, 0);
  for (long long q = 1; q <= B; ++q)
    for (long long p = -B; p <= B; ++p)
      if (std::gcd(p < 0 ? -p : p, q) == 1) add(p, q);

  std::vector<std::vector<int>> adj(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i)
    for (const Node& n : bounded_neighbors(nodes[i].first, nodes[i].second, B))
      adj[i].push_back(index.at(n));

  std::vector<int> grid_ids;
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].first >= -grid && nodes[i].first <= grid &&
        nodes[i].second <= grid)
      grid_ids.push_back((int)i);

  const size_t g = grid_ids.size();
  std::vector<std::vector<int>> D(g, std::vector<int>(g, -1));
  std::vector<int> dist(nodes.size());
  std::map<int, int> grid_pos;
  for (size_t i = 0; i < g; ++i) grid_pos[grid_ids[i]] = (int)i;
  for (size_t i = 0; i < g; ++i) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> todo;
    dist[grid_ids[i]] = 0;
    todo.push(grid_ids[i]);
    while (!todo.empty()) {
      int cur = todo.front();
      todo.pop();
      for (int n : adj[cur])
        if (dist[n] < 0) {
          dist[n] = dist[cur] + 1;
          todo.push(n);
        }
    }
    for (size_t j = 0; j < g; ++j) D[i][j] = dist[grid_ids[j]];
  }

  // recursion agrees with search
  for (size_t i = 0; i < g; ++i) {
    Slope a = make_slope(nodes[grid_ids[i]].first, nodes[grid_ids[i]].second);
    for (size_t j = i; j < g; ++j) {
      Slope b = make_slope(nodes[grid_ids[j]].first, nodes[grid_ids[j]].second);
      if (D[i][j] < 0 || farey_distance(a, b) != D[i][j]) {
        detail = "distance mismatch at " + format_slope(a) + ", " +
                 format_slope(b);
        return false;
      }
    }
  }
  // metric axioms on the grid sample
  for (size_t i = 0; i < g; ++i)
    for (size_t j = 0; j < g; ++j) {
      if (D[i][j] != D[j][i]) { detail = "asymmetric"; return false; }
      if ((D[i][j] == 0) != (i == j)) { detail = "identity fails"; return false; }
      long long det =
          nodes[grid_ids[i]].first * nodes[grid_ids[j]].second -
          nodes[grid_ids[i]].second * nodes[grid_ids[j]].first;
      if ((D[i][j] == 1) != (det == 1 || det == -1)) {
        detail = "edge criterion fails";
        return false;
      }
    }
  for (size_t i = 0; i < g; ++i)
    for (size_t j = 0; j < g; ++j)
      for (size_t k = 0; k < g; ++k)
        if (D[i][k] > D[i][j] + D[j][k]) {
          detail = "triangle inequality fails";
          return false;
        }

  // common neighbors on the mutually adjacent 0/1, 1/1, 1/0 triple
  const Slope tri[3] = {make_slope(0, 1), make_slope(1, 1), make_slope(1, 0)};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      if (farey_distance(tri[i], tri[j]) != 1) {
        detail = "triple not mutually adjacent";
        return false;
      }
      auto mid = common_neighbor(tri[i], tri[j]);
      if (!mid) { detail = "missing common neighbor"; return false; }
      for (const Slope& s : {tri[i], tri[j]}) {
        long long det = mid->p * s.q - mid->q * s.p;
        if (det != 1 && det != -1) {
          detail = "common neighbor not adjacent";
          return false;
        }
      }
    }
  std::ostringstream s;
  s << g << " slopes, graph " << nodes.size();
  detail = s.str();
  return true;
}

// ------------------------------------------------------------------- corpus
// Fixed slope grid across the three families. Product ends facing the anchor
// disks stay at 0/1 so the distance chains exist for every instance.

std::vector<SplittingSpec> corpus() {
  auto sl = [](const char* s) { return parse_slope(s); };
  auto none = std::optional<Slope>{};
  std::vector<SplittingSpec> out;
  out.push_back(build_mh(none, none, none, none, "standard"));
  out.push_back(build_mh(sl("0/1"), none, none, none, "standard"));
  out.push_back(build_mh(sl("1/1"), sl("0/1"), none, none, "standard"));
  out.push_back(build_mh(sl("2/1"), sl("1/0"), none, none, "standard"));
  out.push_back(build_mh(sl("1/2"), sl("3/2"), none, none, "standard"));
  out.push_back(build_mh(none, none, sl("1/1"), none, "standard"));
  out.push_back(build_mh(none, none, none, sl("2/1"), "standard"));
  out.push_back(build_mh(sl("1/1"), sl("1/1"), sl("0/1"), sl("1/0"), "standard"));

  out.push_back(build_mxi(sl("0/1"), sl("1/0"), sl("1/0"), sl("0/1"), none,
                          none, "standard"));
  out.push_back(build_mxi(sl("0/1"), sl("1/1"), sl("1/0"), sl("0/1"), none,
                          none, "standard"));
  out.push_back(build_mxi(sl("0/1"), sl("2/1"), sl("1/1"), sl("0/1"),
                          sl("0/1"), none, "standard"));
  out.push_back(build_mxi(sl("0/1"), sl("5/2"), sl("1/0"), sl("0/1"), none,
                          sl("1/1"), "standard"));
  out.push_back(build_mxi(sl("0/1"), sl("13/8"), sl("2/1"), sl("0/1"),
                          sl("1/1"), sl("2/1"), "standard"));
  out.push_back(build_mxi(sl("0/1"), sl("3/2"), sl("1/1"), sl("0/1"), none,
                          none, "standard"));

  out.push_back(build_hybrid(none, none, none, sl("1/0"), sl("0/1"),
                             "standard"));
  out.push_back(build_hybrid(none, sl("1/1"), sl("0/1"), sl("1/0"), sl("0/1"),
                             "standard"));
  out.push_back(build_hybrid(sl("0/1"), none, none, sl("1/1"), sl("0/1"),
                             "standard"));
  out.push_back(build_hybrid(sl("1/2"), sl("2/1"), sl("1/0"), sl("1/1"),
                             sl("0/1"), "standard"));
  out.push_back(build_hybrid(none, sl("3/2"), sl("1/1"), sl("2/1"), sl("0/1"),
                             "standard"));
  out.push_back(build_hybrid(sl("1/0"), sl("0/1"), sl("1/1"), sl("1/0"),
                             sl("0/1"), "standard"));
  return out;
}

// The two slots dehn_derive will push, sorted by label.
std::pair<const SurgerySlot*, const SurgerySlot*> open_slots(
    const SplittingSpec& spec) {
  std::vector<const SurgerySlot*> open;
  for (const auto& s : spec.slots)
    if (s.host == "none") open.push_back(&s);
  if (open.size() != 2) return {nullptr, nullptr};
  if (open[1]->label < open[0]->label) std::swap(open[0], open[1]);
  return {open[0], open[1]};
}

// ---------------------------------------------------------------- criterion 4

bool crit4_derive(std::string& detail) {
  auto specs = corpus();
  if (specs.size() < 20) {
    detail = "corpus too small";
    return false;
  }
  for (const auto& spec : specs) {
    if (!validate_spec(spec).empty()) {
      detail = "corpus instance fails validation";
      return false;
    }
    auto [s1, s2] = open_slots(spec);
    if (!s1) { detail = "corpus instance lacks two open slots"; return false; }
    // the derivation hypotheses, re-checked one by one
    for (const SurgerySlot* s : {s1, s2}) {
      if (!s->word_a || !is_primitive(*s->word_a, 2) || !s->word_b ||
          !is_primitive(*s->word_b, 2)) {
        detail = "open slot " + s->label + " is not doubly primitive";
        return false;
      }
    }
    for (int side = 0; side < 2; ++side) {
      const auto& r1 = side ? s1->rep_b : s1->rep_a;
      const auto& r2 = side ? s2->rep_b : s2->rep_a;
      if (!r1 || !r2) continue;
      if (shares_boundary_point(*r1, *r2) || crossings(*r1, *r2) != 0) {
        detail = "open slots are not disjoint";
        return false;
      }
    }
    auto derived = dehn_derive(spec);
    for (const SplittingSpec& d : {derived.first, derived.second})
      if (!validate_spec(d).empty()) {
        detail = "derived spec fails validation";
        return false;
      }
    if (derived.first.find(s1->label)->host != "a" ||
        derived.first.find(s2->label)->host != "b" ||
        derived.second.find(s1->label)->host != "b" ||
        derived.second.find(s2->label)->host != "a") {
      detail = "host assignment wrong";
      return false;
    }
  }
  std::ostringstream s;
  s << specs.size() << " instances derived";
  detail = s.str();
  return true;
}

// ---------------------------------------------------------------- criterion 5

bool word_trivial(const Word& w) { return reduce(w).empty(); }

// Single-field edits that each break one verification clause.
std::vector<std::pair<std::string, DistanceCertificate>> tamper_set(
    const DistanceCertificate& c) {
  std::vector<std::pair<std::string, DistanceCertificate>> out;
  DistanceCertificate t = c;
  t.curves.clear();
  out.push_back({"chain emptied", t});

  t = c;
  t.curves[1].rep_a->chords[0].to.t = Rational(99, 100);
  out.push_back({"representative broken", t});

  t = c;
  t.curves[1].rep_a.reset();
  t.curves[1].rep_b.reset();
  out.push_back({"representative removed", t});

  t = c;
  t.curves[2].rep_a = c.curves[1].rep_a;
  out.push_back({"consecutive curves equal", t});

  t = c;
  t.curves.front().rep_a.reset();
  out.push_back({"first curve detached", t});

  t = c;
  t.curves.back().rep_b.reset();
  out.push_back({"last curve detached", t});

  // audit-tag removal wherever the tag alone carries essentiality
  for (size_t i = 0; i < c.curves.size(); ++i) {
    const auto& cc = c.curves[i];
    bool words_trivial = true, tagged = false;
    for (const auto* rep : {&cc.rep_a, &cc.rep_b}) {
      if (!*rep) continue;
      const ChordCurve& r = **rep;
      const SideModel& side = rep == &cc.rep_a ? c.side_a : c.side_b;
      if (!word_trivial(side_word(r, side))) words_trivial = false;
      if (!r.essential_tag.empty()) tagged = true;
    }
    if (!words_trivial || !tagged) continue;
    t = c;
    if (t.curves[i].rep_a) t.curves[i].rep_a->essential_tag.clear();
    if (t.curves[i].rep_b) t.curves[i].rep_b->essential_tag.clear();
    out.push_back({"audit tag removed from " + cc.label, t});
  }
  return out;
}

bool crit5_distance(std::string& detail) {
  size_t certs = 0, tampers = 0;
  for (const auto& spec : corpus()) {
    for (bool second : {false, true}) {
      DistanceCertificate cert = build_distance3_certificate(spec, second);
      VerifyResult r = verify_certificate(cert);
      if (!r.ok || r.distance_bound > 3) {
        detail = family_name(spec.family) + " chain rejected: " + r.reason;
        return false;
      }
      ++certs;
      for (const auto& [what, bad] : tamper_set(cert)) {
        if (verify_certificate(bad).ok) {
          detail = family_name(spec.family) + " accepted tamper: " + what;
          return false;
        }
        ++tampers;
      }
    }
  }
  std::ostringstream s;
  s << certs << " chains verified, " << tampers << " tampers rejected";
  detail = s.str();
  return true;
}

// ---------------------------------------------------------------- criterion 6

bool crit6_dcp(std::string& detail) {
  const DcpCertificate good = build_dcp_certificate();
  if (!verify_dcp(good).ok) {
    detail = "seam certificate rejected: " + verify_dcp(good).reason;
    return false;
  }
  std::vector<std::pair<std::string, DcpCertificate>> bad;
  DcpCertificate m = good;
  m.seam.chords[0].to.t = Rational(99, 100);
  bad.push_back({"seam broken", m});
  m = good;
  m.seam = curve_T1(make_slope(1, 0));
  bad.push_back({"seam crosses a disk", m});
  m = good;
  std::swap(m.disk1, m.disk2);
  bad.push_back({"disks swapped", m});
  m = good;
  m.disk2 = m.disk1;
  bad.push_back({"disk repeated", m});
  m = good;
  m.seam.chords.clear();
  bad.push_back({"seam erased", m});
  for (const auto& [what, cert] : bad)
    if (verify_dcp(cert).ok) {
      detail = "accepted mutation: " + what;
      return false;
    }
  std::ostringstream s;
  s << bad.size() << " mutations rejected";
  detail = s.str();
  return true;
}

// ---------------------------------------------------------------- criterion 7

bool crit7_stab(std::string& detail) {
  size_t singles = 0, doubles = 0;
  for (const auto& spec : corpus()) {
    if (spec.family == Family::MxI) {
      auto dbl = emit_double_stab_certificate(spec);
      if (!verify_stab_certificate(dbl).empty()) {
        detail = "double plan rejected";
        return false;
      }
      ++doubles;
      auto [s1, s2] = open_slots(spec);
      auto a0 = slope_of_word(*s1->word_a);
      auto a1 = slope_of_word(*s2->word_a);
      if (!a0 || !a1) { detail = "front words not slope words"; return false; }
      int d = *a0 == *a1 ? 0 : farey_distance(*a0, *a1);
      if (d <= 2) {
        auto single = emit_single_stab_certificate(spec);
        if (!verify_stab_certificate(single).empty()) {
          detail = "short plan rejected";
          return false;
        }
        if (single.moves.size() >= dbl.moves.size()) {
          detail = "short plan is not shorter";
          return false;
        }
        ++singles;
      } else {
        bool threw = false;
        try {
          emit_single_stab_certificate(spec);
        } catch (const std::exception&) {
          threw = true;
        }
        if (!threw) {
          detail = "distant ends admitted a single stabilization";
          return false;
        }
      }
    } else {
      auto single = emit_single_stab_certificate(spec);
      if (!verify_stab_certificate(single).empty()) {
        detail = family_name(spec.family) + " single plan rejected";
        return false;
      }
      ++singles;
    }
  }
  std::ostringstream s;
  s << singles << " single plans, " << doubles << " double plans";
  detail = s.str();
  return true;
}

// ---------------------------------------------------------------- criterion 8

bool crit8_classify(std::string& detail) {
  size_t type_a = 0, type_b = 0;
  for (const auto& spec : corpus()) {
    auto [s1, s2] = open_slots(spec);
    for (int side = 0; side < 2; ++side) {
      const auto& u = side ? s1->word_b : s1->word_a;
      const auto& v = side ? s2->word_b : s2->word_a;
      const auto& ru = side ? s1->rep_b : s1->rep_a;
      const auto& rv = side ? s2->rep_b : s2->rep_a;
      PairType t = classify_pair(*u, *v, ru ? &*ru : nullptr,
                                 rv ? &*rv : nullptr);
      if (t.tag == PairTag::Unknown) {
        detail = family_name(spec.family) + " pair unclassified: " +
                 t.diagnostics;
        return false;
      }
      PairTag expect;
      if (spec.family == Family::MH) {
        expect = PairTag::TypeA;
      } else if (spec.family == Family::MxI) {
        expect = PairTag::TypeB;
      } else {
        expect = side == 0 ? PairTag::TypeA : PairTag::TypeB;
      }
      if (t.tag != expect) {
        detail = family_name(spec.family) + " side " + (side ? "b" : "a") +
                 " got the wrong type";
        return false;
      }
      (t.tag == PairTag::TypeA ? type_a : type_b) += 1;
    }
  }
  std::ostringstream s;
  s << type_a << " band-sum pairs, " << type_b << " product pairs";
  detail = s.str();
  return true;
}

}  // namespace

int main() {
  criterion(1, "primitivity matches the move-orbit oracle (length <= 6)", 60,
            crit1_primitivity);
  criterion(2, "basis detection matches the folding oracle (length <= 4)", 60,
            crit2_basis);
  criterion(3, "slope distance recursion matches breadth-first search", 60,
            crit3_farey);
  criterion(4, "derivation pipeline accepts the slope-grid corpus", 120,
            crit4_derive);
  criterion(5, "distance-3 chains verify and tampers are rejected", 120,
            crit5_distance);
  criterion(6, "seamed disk-pair certificate verifies, mutations fail", 0,
            crit6_dcp);
  criterion(7, "stabilization plans verify across the corpus", 0, crit7_stab);
  criterion(8, "every corpus pair classifies, no unknowns", 0, crit8_classify);
  return g_failures == 0 ? 0 : 1;
}
