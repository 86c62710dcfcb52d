#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace basislex {

struct CharClassTable {
  std::set<char> vowels{'a', 'e', 'i', 'o', 'u'};
  // Two-letter spellings of a single sound; a cut between their letters is
  // rejected.
  std::set<std::string, std::less<>> digraphs{"sh", "th", "dh"};

  bool is_vowel(char c) const { return vowels.count(c) != 0; }
  bool is_digraph(std::string_view two) const { return digraphs.count(two) != 0; }

  static const CharClassTable& standard();
};

// Plain-text override file, one setting per line, '#' starts a comment:
//   vowels = aeiou
//   digraphs = sh, th, dh
// Keys that are absent keep the standard value.
CharClassTable parse_char_classes(std::string_view text);
CharClassTable load_char_classes(const std::filesystem::path& path);

// Where a candidate word sits inside the name it was cut from.
struct Placement {
  std::string_view name;
  std::size_t start = 0;
};

// Admissibility of a candidate basis word:
//   - it must contain a vowel (pure consonant strings are rejected);
//   - neither of its cuts inside the name may fall between two vowels;
//   - neither of its cuts may fall inside a digraph.
// Without a placement only the vowel rule applies. Consonant-vowel and
// vowel-consonant cuts are both accepted.
// Throws ValidationError if the placement is out of range or the name does
// not contain `word` at `start`.
bool accepts_syntax(std::string_view word, std::optional<Placement> placement = std::nullopt,
                    const CharClassTable& table = CharClassTable::standard());

// True iff a cut before name[cut] is admissible (0 < cut < name.size()).
bool admissible_cut(std::string_view name, std::size_t cut,
                    const CharClassTable& table = CharClassTable::standard());

}  // namespace basislex
