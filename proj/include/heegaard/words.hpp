#pragma once

#include <string>
#include <vector>

namespace heegaard {

// A letter of a free group of rank <= 4. idx in 1..4 names the generator
// (1=a .. 4=d), sign is +1 or -1.
struct Letter {
  int idx = 1;
  int sign = 1;

  Letter() = default;
  Letter(int i, int s) : idx(i), sign(s) {}
  Letter inv() const { return Letter(idx, -sign); }

  friend bool operator==(const Letter& x, const Letter& y) {
    return x.idx == y.idx && x.sign == y.sign;
  }
  friend bool operator!=(const Letter& x, const Letter& y) { return !(x == y); }
  // a < A < b < B < c < C < d < D, used for canonical forms.
  friend bool operator<(const Letter& x, const Letter& y) {
    int kx = 2 * (x.idx - 1) + (x.sign < 0);
    int ky = 2 * (y.idx - 1) + (y.sign < 0);
    return kx < ky;
  }
};

using Word = std::vector<Letter>;

// Text form: lowercase = generator, uppercase = inverse ("aBc" = a b^-1 c).
// Throws std::invalid_argument on characters outside a..d / A..D or idx > rank.
Word parse_word(const std::string& text, int rank = 4);
std::string format_word(const Word& w);

Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);

// Free reduction: cancel adjacent x x^-1 pairs until none remain.
Word reduce(const Word& w);

// Cyclic reduction: freely reduce, then strip matching first/last letters.
Word cyclic_reduce(const Word& w);

// Canonical representative of the conjugacy class of w and w^-1 together:
// cyclically reduce, then take the lexicographically least rotation over
// both the word and its inverse. Two words get equal canonical forms iff
// they are conjugate up to inversion.
Word canonical_cyclic(const Word& w);

bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

// Largest generator index appearing in w (0 for the empty word).
int max_generator(const Word& w);

// Exponent sums per generator, size = rank.
std::vector<long long> abelianize(const Word& w, int rank);

}  // namespace heegaard
