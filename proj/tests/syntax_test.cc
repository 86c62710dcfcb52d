#include "basislex/syntax.h"

#include <random>

#include "basislex/error.h"
#include "doctest.h"

using namespace basislex;

TEST_CASE("pure consonant words are rejected") {
  CHECK_FALSE(accepts_syntax("nk", Placement{"shashank", 6}));
  CHECK_FALSE(accepts_syntax("ph", Placement{"joseph", 4}));
  CHECK_FALSE(accepts_syntax("nth", Placement{"shanthanu", 3}));
  CHECK_FALSE(accepts_syntax("nny", Placement{"sunny", 2}));
  CHECK_FALSE(accepts_syntax("nk"));
}

TEST_CASE("a cut between two vowels is rejected") {
  CHECK_FALSE(accepts_syntax("ilendra", Placement{"shailendra", 3}));
  CHECK_FALSE(accepts_syntax("sha", Placement{"shailendra", 0}));
}

TEST_CASE("a cut inside a digraph is rejected") {
  CHECK_FALSE(accepts_syntax("hi", Placement{"bharathi", 6}));
  CHECK_FALSE(accepts_syntax("bharat", Placement{"bharathi", 0}));
  CHECK_FALSE(accepts_syntax("hya", Placement{"sandhya", 4}));
}

TEST_CASE("admissible words are accepted") {
  CHECK(accepts_syntax("na", Placement{"krishna", 5}));
  CHECK(accepts_syntax("krish", Placement{"krishna", 0}));
  CHECK(accepts_syntax("bharathi", Placement{"bharathi", 0}));
  // consonant-vowel and vowel-consonant cuts are allowed
  CHECK(accepts_syntax("ma", Placement{"rama", 2}));
  CHECK(accepts_syntax("ram", Placement{"ramesh", 0}));
  CHECK(accepts_syntax("ana"));
}

TEST_CASE("placement must match the word") {
  CHECK_THROWS_AS(accepts_syntax("nk", Placement{"shashank", 7}), ValidationError);
  CHECK_THROWS_AS(accepts_syntax("xy", Placement{"shashank", 0}), ValidationError);
  CHECK_THROWS_AS(accepts_syntax("a", Placement{"abc", 9}), ValidationError);
}

TEST_CASE("consonant-only words are rejected in every context") {
  std::mt19937 rng(3);
  const std::string consonants = "bcdfghjklmnpqrstvwxyz";
  const std::string letters = "abcdefghijklmnopqrstuvwxyz";
  for (int i = 0; i < 500; ++i) {
    std::string word;
    const int wl = std::uniform_int_distribution<int>(1, 5)(rng);
    for (int k = 0; k < wl; ++k) word += consonants[rng() % consonants.size()];
    std::string left, right;
    for (int k = std::uniform_int_distribution<int>(0, 4)(rng); k > 0; --k) left += letters[rng() % 26];
    for (int k = std::uniform_int_distribution<int>(0, 4)(rng); k > 0; --k) right += letters[rng() % 26];
    const std::string name = left + word + right;
    CHECK_FALSE(accepts_syntax(word, Placement{name, left.size()}));
    CHECK_FALSE(accepts_syntax(word));
  }
}

TEST_CASE("char class overrides") {
  const auto table = parse_char_classes("# custom\nvowels = aeiouy\ndigraphs = ph, sh\n");
  CHECK(table.is_vowel('y'));
  CHECK(table.is_digraph("ph"));
  CHECK_FALSE(table.is_digraph("th"));
  CHECK(accepts_syntax("ny", std::nullopt, table));
  CHECK(accepts_syntax("hi", Placement{"bharathi", 6}, table));
  CHECK_FALSE(accepts_syntax("hen", Placement{"stephen", 4}, table));

  const auto defaults = parse_char_classes("");
  CHECK(defaults.vowels == CharClassTable::standard().vowels);
  CHECK_THROWS_AS(parse_char_classes("digraphs = abc\n"), ParseError);
  CHECK_THROWS_AS(parse_char_classes("colour = red\n"), ParseError);
}
