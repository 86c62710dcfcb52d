#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace basislex {

enum class WordSource { kSeed, kMined };

struct BasisWord {
  std::string text;
  WordSource source = WordSource::kSeed;
  // Number of corpus names that required the word when it was mined.
  std::int64_t demand = 0;
};

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

// Hash set of words with string_view lookup and a cached maximum length,
// which bounds every substring scan against it.
class WordSet {
 public:
  WordSet() = default;
  template <typename Range>
  explicit WordSet(const Range& words) {
    for (const auto& w : words) insert(std::string(w));
  }

  bool insert(std::string word);
  bool erase(std::string_view word);
  bool contains(std::string_view word) const {
    return words_.find(word) != words_.end();
  }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  std::size_t max_length() const;
  std::vector<std::string> sorted() const;

 private:
  std::unordered_set<std::string, StringHash, std::equal_to<>> words_;
  mutable std::optional<std::size_t> max_length_;
};

// The evolving unit set. Words are kept ordered by text so iteration is
// deterministic. The orthogonality flag is a cache owned by the ortho module
// and cleared by any mutation.
class Basis {
 public:
  Basis() = default;
  explicit Basis(const std::vector<std::string>& words,
                 WordSource source = WordSource::kSeed);

  bool insert(BasisWord word);
  bool insert(std::string_view text, WordSource source = WordSource::kSeed);
  bool erase(std::string_view text);

  bool contains(std::string_view text) const;
  const BasisWord* find(std::string_view text) const;
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  std::vector<std::string> texts() const;
  std::vector<BasisWord> words() const;
  WordSet word_set() const { return WordSet(texts()); }

  std::optional<bool> cached_orthogonal() const { return is_orthogonal_; }
  void set_cached_orthogonal(bool v) const { is_orthogonal_ = v; }

  friend bool operator==(const Basis& a, const Basis& b) { return a.texts() == b.texts(); }

 private:
  std::map<std::string, BasisWord, std::less<>> words_;
  mutable std::optional<bool> is_orthogonal_;
};

}  // namespace basislex
