#include "heegaard/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace heegaard {

Word parse_word(const std::string& text, int rank) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    // x/y are accepted as aliases of a/b for rank-2 contexts.
    if (c == 'x') c = 'a';
    else if (c == 'y') c = 'b';
    else if (c == 'X') c = 'A';
    else if (c == 'Y') c = 'B';
    int idx, sign;
    if (c >= 'a' && c <= 'd') { idx = c - 'a' + 1; sign = 1; }
    else if (c >= 'A' && c <= 'D') { idx = c - 'A' + 1; sign = -1; }
    else throw std::invalid_argument(std::string("bad letter '") + c + "'");
    if (idx > rank)
      throw std::invalid_argument(std::string("letter '") + c + "' exceeds rank");
    w.push_back(Letter(idx, sign));
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (const Letter& l : w)
    s.push_back(char((l.sign > 0 ? 'a' : 'A') + l.idx - 1));
  return s;
}

Word inverse(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(it->inv());
  return r;
}

Word concat(const Word& u, const Word& v) {
  Word r = u;
  r.insert(r.end(), v.begin(), v.end());
  return r;
}

Word reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inv()) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = reduce(w);
  size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == r[j - 1].inv()) { ++i; --j; }
  return Word(r.begin() + i, r.begin() + j);
}

namespace {

bool rotation_less(const Word& w, size_t i, const Word& best, size_t bi) {
  size_t n = w.size();
  for (size_t k = 0; k < n; ++k) {
    const Letter& x = w[(i + k) % n];
    const Letter& y = best[(bi + k) % n];
    if (x < y) return true;
    if (y < x) return false;
  }
  return false;
}

Word least_rotation(const Word& w) {
  if (w.empty()) return w;
  size_t best = 0;
  for (size_t i = 1; i < w.size(); ++i)
    if (rotation_less(w, i, w, best)) best = i;
  Word out;
  out.reserve(w.size());
  for (size_t k = 0; k < w.size(); ++k) out.push_back(w[(best + k) % w.size()]);
  return out;
}

}  // namespace

Word canonical_cyclic(const Word& w) {
  Word c = cyclic_reduce(w);
  if (c.empty()) return c;
  Word a = least_rotation(c);
  Word b = least_rotation(inverse(c));
  return std::lexicographical_compare(
             b.begin(), b.end(), a.begin(), a.end(),
             [](const Letter& x, const Letter& y) { return x < y; })
             ? b
             : a;
}

bool is_reduced(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1].inv()) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  if (w.size() >= 2 && w.front() == w.back().inv()) return false;
  return true;
}

int max_generator(const Word& w) {
  int m = 0;
  for (const Letter& l : w) m = std::max(m, l.idx);
  return m;
}

std::vector<long long> abelianize(const Word& w, int rank) {
  std::vector<long long> e(rank, 0);
  for (const Letter& l : w) {
    if (l.idx > rank) throw std::invalid_argument("letter exceeds rank");
    e[l.idx - 1] += l.sign;
  }
  return e;
}

}  // namespace heegaard
