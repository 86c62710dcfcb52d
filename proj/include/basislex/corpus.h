#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace basislex {

struct NameRecord {
  std::string surface;
  std::int64_t frequency = 0;

  friend bool operator==(const NameRecord&, const NameRecord&) = default;
};

// A multiset of names keyed by surface string. Adding a surface that is
// already present sums the frequencies, so records are always unique.
// A corpus straight from load_names() is "raw": surfaces may still carry
// case, punctuation or several whitespace-separated parts. normalize()
// produces the form the rest of the library expects.
class Corpus {
 public:
  Corpus() = default;

  void add(std::string_view surface, std::int64_t frequency = 1);

  // Records ordered by surface.
  std::vector<NameRecord> records() const;
  std::int64_t frequency(std::string_view surface) const;
  bool contains(std::string_view surface) const;

  std::size_t total_unique() const { return counts_.size(); }
  std::int64_t max_frequency() const;
  std::int64_t total_frequency() const;
  bool empty() const { return counts_.empty(); }

  friend bool operator==(const Corpus&, const Corpus&) = default;

 private:
  std::map<std::string, std::int64_t, std::less<>> counts_;
};

enum class NameFileFormat { kPlain, kNameFreq };

NameFileFormat parse_name_file_format(std::string_view text);

// Reads a names file. kPlain counts repeated lines; kNameFreq expects
// "name<sep>count" where <sep> is a tab or a comma, detected from the first
// data line and required on every line after it. Blank lines are skipped,
// CRLF endings accepted.
Corpus load_names(const std::filesystem::path& path, NameFileFormat format);
Corpus parse_names(std::string_view text, NameFileFormat format);

// Lowercases, splits on whitespace (each part becomes its own name), strips
// every character that is not an ASCII letter and drops names shorter than
// min_length. Throws ValidationError when nothing survives.
Corpus normalize(const Corpus& raw, int min_length = 3);

// Frequency descending, surface ascending on ties.
std::vector<NameRecord> frequency_rank(const Corpus& corpus);

}  // namespace basislex
