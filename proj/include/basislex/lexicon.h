#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "basislex/basis.h"
#include "basislex/error.h"

namespace basislex {

struct TranscriptionEntry {
  std::string basis_word;
  std::string darpa;  // space-separated phones
  std::string sapi;

  friend bool operator==(const TranscriptionEntry&, const TranscriptionEntry&) = default;
};

class TranscriptionTable {
 public:
  // Throws ValidationError if the word is already present.
  void add(TranscriptionEntry entry);
  const TranscriptionEntry* find(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }
  std::vector<TranscriptionEntry> entries() const;

 private:
  std::map<std::string, TranscriptionEntry, std::less<>> entries_;
};

struct LoadedTable {
  TranscriptionTable table;
  std::vector<std::string> warnings;  // e.g. words missing from the basis
};

// One entry per line: word<TAB>darpa<TAB>sapi. Lines whose first character
// is '#' and blank lines are skipped. Runs of whitespace inside a phone field
// collapse to one space. A duplicate word or an empty field is an error;
// with a basis given, words outside it are kept and reported as warnings.
LoadedTable parse_transcriptions(std::string_view text, const Basis* basis = nullptr);
LoadedTable load_transcriptions(const std::filesystem::path& path, const Basis* basis = nullptr);

// Raised when segments have no transcription; lists every such word once.
class MissingTranscriptionError : public ValidationError {
 public:
  explicit MissingTranscriptionError(std::vector<std::string> missing);
  const std::vector<std::string>& missing() const { return missing_; }

 private:
  std::vector<std::string> missing_;
};

struct Pronunciation {
  std::string darpa;
  std::string sapi;
};

// Joins the segments' phone strings with single spaces, in order. Throws
// ValidationError if the words do not spell `name`.
Pronunciation compose(std::string_view name, const std::vector<std::string>& words,
                      const TranscriptionTable& table);

struct LexiconEntry {
  std::vector<std::string> words;
  std::string darpa;
  std::string sapi;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

using Lexicon = std::map<std::string, LexiconEntry>;

struct NameWords {
  std::string name;
  std::vector<std::string> words;
};

// Composes every name; all missing transcriptions are collected before the
// MissingTranscriptionError is thrown.
Lexicon build_lexicon(const std::vector<NameWords>& segmentations, const TranscriptionTable& table);

enum class LexiconFormat { kTsv, kFestival, kSapi };

LexiconFormat parse_lexicon_format(std::string_view text);

// Name-sorted. tsv:      header "name\twords\tdarpa\tsapi", then one row per name
//              festival: ("name" nil (darpa phones))
//              sapi:     name<TAB>sapi phones
// The two engine formats start with a ';;' or '#' comment line.
void emit_lexicon(const Lexicon& lex, LexiconFormat format, std::ostream& out);
Lexicon parse_lexicon_tsv(std::string_view text);

}  // namespace basislex
