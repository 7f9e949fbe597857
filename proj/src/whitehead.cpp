#include "heegaard/whitehead.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace heegaard {

Word WhiteheadMove::apply_letter(const Letter& x) const {
  if (x.idx == mult.idx) return {x};
  bool in = contains(x), inv_in = contains(x.inv());
  Word out;
  if (inv_in) out.push_back(mult.inv());
  out.push_back(x);
  if (in) out.push_back(mult);
  return out;
}

Word WhiteheadMove::apply(const Word& w) const {
  Word out;
  out.reserve(3 * w.size());
  for (const Letter& l : w) {
    Word img = apply_letter(l);
    out.insert(out.end(), img.begin(), img.end());
  }
  return reduce(out);
}

WhiteheadMove WhiteheadMove::inverse_move() const {
  WhiteheadMove m;
  m.mult = mult.inv();
  m.set = set;
  m.set &= ~(1u << letter_key(mult));
  m.set |= 1u << letter_key(mult.inv());
  return m;
}

std::string WhiteheadMove::describe() const {
  std::string s = "({";
  bool first = true;
  for (int k = 0; k < 8; ++k) {
    if ((set >> k) & 1u) {
      if (!first) s += ",";
      s += format_word({letter_from_key(k)});
      first = false;
    }
  }
  s += "}, " + format_word({mult}) + ")";
  return s;
}

std::vector<WhiteheadMove> all_type2_moves(int rank) {
  std::vector<WhiteheadMove> moves;
  std::vector<int> free_slots;
  for (int mk = 0; mk < 2 * rank; ++mk) {
    Letter m = letter_from_key(mk);
    free_slots.clear();
    for (int k = 0; k < 2 * rank; ++k)
      if (k != letter_key(m) && k != letter_key(m.inv())) free_slots.push_back(k);
    uint32_t n = 1u << free_slots.size();
    for (uint32_t bits = 0; bits < n; ++bits) {
      WhiteheadMove mv;
      mv.mult = m;
      mv.set = 1u << mk;
      for (size_t i = 0; i < free_slots.size(); ++i)
        if ((bits >> i) & 1u) mv.set |= 1u << free_slots[i];
      moves.push_back(mv);
    }
  }
  return moves;
}

Automorphism Automorphism::identity(int rank) {
  Automorphism a;
  a.rank = rank;
  for (int i = 1; i <= rank; ++i) a.images.push_back({Letter(i, 1)});
  return a;
}

Word Automorphism::apply(const Word& w) const {
  Word out;
  for (const Letter& l : w) {
    if (l.idx > rank) throw std::invalid_argument("letter exceeds rank");
    const Word& img = images[l.idx - 1];
    if (l.sign > 0) out.insert(out.end(), img.begin(), img.end());
    else {
      Word inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return reduce(out);
}

Automorphism Automorphism::then(const Automorphism& g) const {
  Automorphism h;
  h.rank = rank;
  for (const Word& img : images) h.images.push_back(g.apply(img));
  return h;
}

Automorphism move_as_automorphism(const WhiteheadMove& m, int rank) {
  Automorphism a;
  a.rank = rank;
  for (int i = 1; i <= rank; ++i) a.images.push_back(m.apply_letter(Letter(i, 1)));
  return a;
}

Automorphism permutation_automorphism(int rank, const std::vector<Letter>& targets) {
  Automorphism a;
  a.rank = rank;
  for (const Letter& t : targets) a.images.push_back(Word{t});
  return a;
}

namespace {

// BFS of the equal-length slice around `start` looking for any element that
// admits a strictly length-reducing move. Returns the move path from `start`
// (level moves then the reducing one), or nullopt if the slice is exhausted.
std::optional<std::vector<WhiteheadMove>> find_reduction_via_level(
    const Word& start, const std::vector<WhiteheadMove>& moves) {
  const size_t len = start.size();
  const size_t cap = 50000;
  struct Node {
    Word w;
    std::vector<WhiteheadMove> path;
  };
  std::deque<Node> queue;
  std::map<std::string, bool> seen;
  queue.push_back({start, {}});
  seen[format_word(canonical_cyclic(start))] = true;
  while (!queue.empty() && seen.size() < cap) {
    Node cur = queue.front();
    queue.pop_front();
    for (const WhiteheadMove& m : moves) {
      Word img = cyclic_reduce(m.apply(cur.w));
      if (img.size() < len) {
        auto path = cur.path;
        path.push_back(m);
        return path;
      }
      if (img.size() == len) {
        std::string key = format_word(canonical_cyclic(img));
        if (!seen.count(key)) {
          seen[key] = true;
          auto path = cur.path;
          path.push_back(m);
          queue.push_back({img, std::move(path)});
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

PrimitivityResult check_primitive(const Word& w, int rank) {
  PrimitivityResult res;
  Word c = cyclic_reduce(w);
  if (c.empty()) return res;
  auto moves = all_type2_moves(rank);
  for (;;) {
    if (c.size() == 1) {
      res.primitive = true;
      return res;
    }
    bool reduced = false;
    for (const WhiteheadMove& m : moves) {
      Word img = cyclic_reduce(m.apply(c));
      if (img.size() < c.size()) {
        res.trace.push_back({m.describe(), format_word(canonical_cyclic(img))});
        c = img;
        reduced = true;
        break;
      }
    }
    if (reduced) continue;
    // Local minimum under single moves; sweep the equal-length slice.
    auto path = find_reduction_via_level(c, moves);
    if (!path) return res;  // global minimum by peak reduction, length > 1
    for (const WhiteheadMove& m : *path) {
      c = cyclic_reduce(m.apply(c));
      res.trace.push_back({m.describe(), format_word(canonical_cyclic(c))});
    }
  }
}

bool is_primitive(const Word& w, int rank) { return check_primitive(w, rank).primitive; }

TrackedDescent descend_to_generator(const Word& w, int rank) {
  TrackedDescent out;
  out.phi = Automorphism::identity(rank);
  out.phi_inv = Automorphism::identity(rank);
  auto push_move = [&](const WhiteheadMove& m) {
    out.phi = out.phi.then(move_as_automorphism(m, rank));
    out.phi_inv =
        move_as_automorphism(m.inverse_move(), rank).then(out.phi_inv);
  };
  Word c = cyclic_reduce(w);
  if (c.empty()) return out;
  auto moves = all_type2_moves(rank);
  for (;;) {
    if (c.size() == 1) {
      out.primitive = true;
      out.target = c[0];
      return out;
    }
    bool reduced = false;
    for (const WhiteheadMove& m : moves) {
      Word img = cyclic_reduce(m.apply(c));
      if (img.size() < c.size()) {
        push_move(m);
        c = img;
        reduced = true;
        break;
      }
    }
    if (reduced) continue;
    auto path = find_reduction_via_level(c, moves);
    if (!path) return out;
    for (const WhiteheadMove& m : *path) {
      push_move(m);
      c = cyclic_reduce(m.apply(c));
    }
  }
}

}  // namespace heegaard
