#include "basislex/lexicon.h"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include "text_util.h"

namespace basislex {

namespace {

std::string collapse_spaces(std::string_view s) {
  std::string out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) {
    if (!out.empty()) out += ' ';
    out += tok;
  }
  return out;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string join_list(const std::vector<std::string>& items) {
  return detail::join(items, ", ");
}

}  // namespace

void TranscriptionTable::add(TranscriptionEntry entry) {
  if (entries_.count(entry.basis_word)) {
    throw ValidationError("duplicate transcription for '" + entry.basis_word + "'");
  }
  auto key = entry.basis_word;
  entries_.emplace(std::move(key), std::move(entry));
}

const TranscriptionEntry* TranscriptionTable::find(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<TranscriptionEntry> TranscriptionTable::entries() const {
  std::vector<TranscriptionEntry> out;
  for (const auto& kv : entries_) out.push_back(kv.second);
  return out;
}

LoadedTable parse_transcriptions(std::string_view text, const Basis* basis) {
  LoadedTable out;
  const auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = lines[i];
    if (line.empty() || line.front() == '#' || detail::trim(line).empty()) continue;
    const auto fields = detail::split(line, '\t');
    if (fields.size() != 3) throw ParseError("expected word<TAB>darpa<TAB>sapi", i + 1);
    TranscriptionEntry e{std::string(detail::trim(fields[0])), collapse_spaces(fields[1]),
                         collapse_spaces(fields[2])};
    if (e.basis_word.empty()) throw ParseError("empty basis word", i + 1);
    if (e.darpa.empty() || e.sapi.empty()) {
      throw ParseError("empty phone field for '" + e.basis_word + "'", i + 1);
    }
    if (out.table.find(e.basis_word)) {
      throw ParseError("duplicate transcription for '" + e.basis_word + "'", i + 1);
    }
    if (basis && !basis->contains(e.basis_word)) {
      out.warnings.push_back("'" + e.basis_word + "' is not in the basis");
    }
    out.table.add(std::move(e));
  }
  return out;
}

LoadedTable load_transcriptions(const std::filesystem::path& path, const Basis* basis) {
  const auto text = detail::read_file(path.string());
  try {
    return parse_transcriptions(text, basis);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

MissingTranscriptionError::MissingTranscriptionError(std::vector<std::string> missing)
    : ValidationError("missing transcriptions: " + join_list(missing)),
      missing_(std::move(missing)) {}

Pronunciation compose(std::string_view name, const std::vector<std::string>& words,
                      const TranscriptionTable& table) {
  std::string spelled;
  for (const auto& w : words) spelled += w;
  if (spelled != name) {
    throw ValidationError("segmentation '" + detail::join(words, " ") + "' does not spell '" +
                          std::string(name) + "'");
  }
  std::vector<std::string> missing;
  Pronunciation p;
  for (const auto& w : words) {
    const auto* e = table.find(w);
    if (!e) {
      if (std::find(missing.begin(), missing.end(), w) == missing.end()) missing.push_back(w);
      continue;
    }
    if (!p.darpa.empty()) {
      p.darpa += ' ';
      p.sapi += ' ';
    }
    p.darpa += e->darpa;
    p.sapi += e->sapi;
  }
  if (!missing.empty()) throw MissingTranscriptionError(std::move(missing));
  return p;
}

Lexicon build_lexicon(const std::vector<NameWords>& segmentations, const TranscriptionTable& table) {
  std::set<std::string> missing;
  for (const auto& s : segmentations) {
    for (const auto& w : s.words) {
      if (!table.find(w)) missing.insert(w);
    }
  }
  if (!missing.empty()) throw MissingTranscriptionError({missing.begin(), missing.end()});
  Lexicon lex;
  for (const auto& s : segmentations) {
    auto p = compose(s.name, s.words, table);
    lex[s.name] = {s.words, std::move(p.darpa), std::move(p.sapi)};
  }
  return lex;
}

LexiconFormat parse_lexicon_format(std::string_view text) {
  if (text == "tsv") return LexiconFormat::kTsv;
  if (text == "festival" || text == "festival_like") return LexiconFormat::kFestival;
  if (text == "sapi" || text == "sapi_like") return LexiconFormat::kSapi;
  throw ParseError("unknown lexicon format '" + std::string(text) + "'");
}

void emit_lexicon(const Lexicon& lex, LexiconFormat format, std::ostream& out) {
  switch (format) {
    case LexiconFormat::kTsv:
      out << "name\twords\tdarpa\tsapi\n";
      for (const auto& [name, e] : lex) {
        out << name << '\t' << detail::join(e.words, " ") << '\t' << e.darpa << '\t' << e.sapi
            << '\n';
      }
      break;
    case LexiconFormat::kFestival:
      out << ";; name lexicon, DARPA phones\n";
      for (const auto& [name, e] : lex) out << "(\"" << name << "\" nil (" << e.darpa << "))\n";
      break;
    case LexiconFormat::kSapi:
      out << "# name lexicon, SAPI phones\n";
      for (const auto& [name, e] : lex) out << name << '\t' << e.sapi << '\n';
      break;
  }
}

Lexicon parse_lexicon_tsv(std::string_view text) {
  Lexicon lex;
  const auto lines = detail::split_lines(text);
  if (lines.empty() || lines[0] != "name\twords\tdarpa\tsapi") {
    throw ParseError("missing lexicon header", 1);
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto f = detail::split(lines[i], '\t');
    if (f.size() != 4) throw ParseError("expected 4 tab-separated fields", i + 1);
    lex[std::string(f[0])] = {split_words(f[1]), std::string(f[2]), std::string(f[3])};
  }
  return lex;
}

}  // namespace basislex
