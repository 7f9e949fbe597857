#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "heegaard/words.hpp"

using namespace heegaard;

TEST_CASE("parse and format round-trip") {
  for (const char* s : {"a", "ab", "aBcD", "abcdABCD", "DDc"}) {
    CHECK(format_word(parse_word(s, 4)) == s);
  }
  CHECK(format_word(parse_word("", 4)).empty());
}

TEST_CASE("parse accepts x y aliases for the first two generators") {
  CHECK(parse_word("xyXY", 2) == parse_word("abAB", 2));
  CHECK(parse_word("xxY", 2) == parse_word("aaB", 2));
}

TEST_CASE("parse rejects out-of-rank and junk characters") {
  CHECK_THROWS_AS(parse_word("c", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("abe", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a b", 4), std::invalid_argument);
  CHECK_NOTHROW(parse_word("c", 3));
}

TEST_CASE("free reduction") {
  CHECK(format_word(reduce(parse_word("abB"))) == "a");
  CHECK(reduce(parse_word("aBbA")).empty());
  CHECK(format_word(reduce(parse_word("abBA"))).empty());
  CHECK(format_word(reduce(parse_word("aabBA"))) == "a");
  CHECK(is_reduced(reduce(parse_word("aBbAabBA"))));
}

TEST_CASE("cyclic reduction strips conjugating prefixes") {
  CHECK(format_word(cyclic_reduce(parse_word("abA"))) == "b");
  CHECK(format_word(cyclic_reduce(parse_word("aabAA"))) == "b");
  CHECK(cyclic_reduce(parse_word("aBc")).size() == 3);  // already cyclically reduced
  CHECK(is_cyclically_reduced(cyclic_reduce(parse_word("abcCBA"))));
}

TEST_CASE("canonical form identifies rotations and inverses") {
  Word ab = canonical_cyclic(parse_word("ab"));
  CHECK(canonical_cyclic(parse_word("ba")) == ab);
  CHECK(canonical_cyclic(parse_word("BA")) == ab);
  CHECK(canonical_cyclic(parse_word("Bab" /* conjugate of a */)) ==
        canonical_cyclic(parse_word("a")));
  CHECK(canonical_cyclic(parse_word("aBA")) == canonical_cyclic(parse_word("b")));
  CHECK(canonical_cyclic(inverse(parse_word("aab"))) ==
        canonical_cyclic(parse_word("aab")));
  // distinct classes stay distinct
  CHECK(canonical_cyclic(parse_word("ab")) != canonical_cyclic(parse_word("aB")));
  CHECK(canonical_cyclic(parse_word("a")) != canonical_cyclic(parse_word("b")));
}

TEST_CASE("canonical form is a fixed point") {
  for (const char* s : {"ab", "bbaBA", "cdCD", "aB"}) {
    Word c = canonical_cyclic(parse_word(s));
    CHECK(canonical_cyclic(c) == c);
  }
}

TEST_CASE("inverse and concat behave as group operations") {
  Word u = parse_word("aBc"), v = parse_word("Cba");
  CHECK(reduce(concat(u, inverse(u))).empty());
  CHECK(format_word(inverse(u)) == "CbA");
  CHECK(reduce(concat(u, v)).size() == 2);  // c C cancels, then B b
}

TEST_CASE("abelianize counts signed exponents") {
  auto ab = abelianize(parse_word("aabA"), 2);
  CHECK(ab == std::vector<long long>{1, 1});
  auto cd = abelianize(parse_word("cDDcd"), 4);
  CHECK(cd == std::vector<long long>{0, 0, 2, -1});
  CHECK(abelianize(parse_word("abAB"), 2) == std::vector<long long>{0, 0});
}

TEST_CASE("max_generator") {
  CHECK(max_generator(parse_word("")) == 0);
  CHECK(max_generator(parse_word("aBa")) == 2);
  CHECK(max_generator(parse_word("aD")) == 4);
}

TEST_CASE("letter order used by canonical forms: a < A < b < B") {
  CHECK(Letter(1, 1) < Letter(1, -1));
  CHECK(Letter(1, -1) < Letter(2, 1));
  CHECK(format_word(canonical_cyclic(parse_word("ba"))) == "ab");
}
