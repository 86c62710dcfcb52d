#include "basislex/syntax.h"

#include <algorithm>
#include <cctype>

#include "basislex/error.h"
#include "text_util.h"

namespace basislex {

const CharClassTable& CharClassTable::standard() {
  static const CharClassTable table;
  return table;
}

CharClassTable parse_char_classes(std::string_view text) {
  CharClassTable table;
  const auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = lines[i];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key = value", i + 1);
    const auto key = detail::trim(line.substr(0, eq));
    const auto value = detail::trim(line.substr(eq + 1));
    if (key == "vowels") {
      table.vowels.clear();
      for (char c : value) {
        if (std::isalpha(static_cast<unsigned char>(c))) table.vowels.insert(c);
      }
    } else if (key == "digraphs") {
      table.digraphs.clear();
      for (auto item : detail::split(value, ',')) {
        item = detail::trim(item);
        if (item.empty()) continue;
        if (item.size() != 2) throw ParseError("digraph must have two letters", i + 1);
        table.digraphs.emplace(item);
      }
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", i + 1);
    }
  }
  return table;
}

CharClassTable load_char_classes(const std::filesystem::path& path) {
  return parse_char_classes(detail::read_file(path.string()));
}

bool admissible_cut(std::string_view name, std::size_t cut, const CharClassTable& table) {
  if (cut == 0 || cut >= name.size()) return true;
  const char left = name[cut - 1];
  const char right = name[cut];
  if (table.is_vowel(left) && table.is_vowel(right)) return false;
  return !table.is_digraph(name.substr(cut - 1, 2));
}

bool accepts_syntax(std::string_view word, std::optional<Placement> placement,
                    const CharClassTable& table) {
  if (placement) {
    const auto& [name, start] = *placement;
    if (start > name.size() || word.size() > name.size() - start) {
      throw ValidationError("placement of '" + std::string(word) + "' at " +
                            std::to_string(start) + " is out of range for '" +
                            std::string(name) + "'");
    }
    if (name.substr(start, word.size()) != word) {
      throw ValidationError("'" + std::string(name) + "' does not contain '" +
                            std::string(word) + "' at " + std::to_string(start));
    }
  }
  if (std::none_of(word.begin(), word.end(), [&](char c) { return table.is_vowel(c); })) {
    return false;
  }
  if (!placement) return true;
  const auto& [name, start] = *placement;
  return admissible_cut(name, start, table) && admissible_cut(name, start + word.size(), table);
}

}  // namespace basislex
