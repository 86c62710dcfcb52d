#include "basislex/corpus.h"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "basislex/error.h"
#include "text_util.h"

namespace basislex {

void Corpus::add(std::string_view surface, std::int64_t frequency) {
  auto it = counts_.find(surface);
  if (it == counts_.end()) {
    counts_.emplace(std::string(surface), frequency);
  } else {
    it->second += frequency;
  }
}

std::vector<NameRecord> Corpus::records() const {
  std::vector<NameRecord> out;
  out.reserve(counts_.size());
  for (const auto& [surface, freq] : counts_) out.push_back({surface, freq});
  return out;
}

std::int64_t Corpus::frequency(std::string_view surface) const {
  auto it = counts_.find(surface);
  return it == counts_.end() ? 0 : it->second;
}

bool Corpus::contains(std::string_view surface) const {
  return counts_.find(surface) != counts_.end();
}

std::int64_t Corpus::max_frequency() const {
  std::int64_t best = 0;
  for (const auto& kv : counts_) best = std::max(best, kv.second);
  return best;
}

std::int64_t Corpus::total_frequency() const {
  std::int64_t sum = 0;
  for (const auto& kv : counts_) sum += kv.second;
  return sum;
}

NameFileFormat parse_name_file_format(std::string_view text) {
  if (text == "plain") return NameFileFormat::kPlain;
  if (text == "name_freq") return NameFileFormat::kNameFreq;
  throw ParseError("unknown names format '" + std::string(text) + "'");
}

Corpus parse_names(std::string_view text, NameFileFormat format) {
  Corpus corpus;
  char sep = 0;
  const auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    const auto line = detail::trim(lines[i]);
    if (line.empty()) continue;

    if (format == NameFileFormat::kPlain) {
      corpus.add(line, 1);
      continue;
    }

    if (sep == 0) sep = line.find('\t') != std::string_view::npos ? '\t' : ',';
    const auto pos = line.rfind(sep);
    if (pos == std::string_view::npos) {
      throw ParseError(std::string("missing '") + (sep == '\t' ? "\\t" : ",") +
                           "' separator",
                       lineno);
    }
    const auto name = detail::trim(line.substr(0, pos));
    const auto count_text = detail::trim(line.substr(pos + 1));
    std::int64_t count = 0;
    const auto* first = count_text.data();
    const auto* last = first + count_text.size();
    const auto [ptr, ec] = std::from_chars(first, last, count);
    if (count_text.empty() || ec != std::errc() || ptr != last || count < 1) {
      throw ParseError("malformed count '" + std::string(count_text) + "'", lineno);
    }
    if (name.empty()) throw ParseError("empty name", lineno);
    corpus.add(name, count);
  }
  return corpus;
}

Corpus load_names(const std::filesystem::path& path, NameFileFormat format) {
  const auto text = detail::read_file(path.string());
  try {
    return parse_names(text, format);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Corpus normalize(const Corpus& raw, int min_length) {
  if (min_length < 1) throw ValidationError("min_length must be >= 1");
  Corpus out;
  for (const auto& rec : raw.records()) {
    std::string part;
    auto flush = [&] {
      if (static_cast<int>(part.size()) >= min_length) out.add(part, rec.frequency);
      part.clear();
    };
    for (unsigned char ch : rec.surface) {
      if (std::isspace(ch)) {
        flush();
      } else if (ch < 0x80 && std::isalpha(ch)) {
        part.push_back(static_cast<char>(std::tolower(ch)));
      }
    }
    flush();
  }
  if (out.empty()) throw ValidationError("empty corpus after normalization");
  return out;
}

std::vector<NameRecord> frequency_rank(const Corpus& corpus) {
  auto recs = corpus.records();
  std::stable_sort(recs.begin(), recs.end(), [](const NameRecord& a, const NameRecord& b) {
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.surface < b.surface;
  });
  return recs;
}

}  // namespace basislex
