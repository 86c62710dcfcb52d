#include "basislex/basis.h"

#include <algorithm>

namespace basislex {

bool WordSet::insert(std::string word) {
  const auto len = word.size();
  const bool inserted = words_.insert(std::move(word)).second;
  if (inserted && max_length_) max_length_ = std::max(*max_length_, len);
  return inserted;
}

bool WordSet::erase(std::string_view word) {
  auto it = words_.find(word);
  if (it == words_.end()) return false;
  if (max_length_ && it->size() == *max_length_) max_length_.reset();
  words_.erase(it);
  return true;
}

std::size_t WordSet::max_length() const {
  if (!max_length_) {
    std::size_t m = 0;
    for (const auto& w : words_) m = std::max(m, w.size());
    max_length_ = m;
  }
  return *max_length_;
}

std::vector<std::string> WordSet::sorted() const {
  std::vector<std::string> out(words_.begin(), words_.end());
  std::sort(out.begin(), out.end());
  return out;
}

Basis::Basis(const std::vector<std::string>& words, WordSource source) {
  for (const auto& w : words) insert(w, source);
}

bool Basis::insert(BasisWord word) {
  if (word.text.empty()) return false;
  auto key = word.text;
  const bool inserted = words_.emplace(std::move(key), std::move(word)).second;
  if (inserted) is_orthogonal_.reset();
  return inserted;
}

bool Basis::insert(std::string_view text, WordSource source) {
  return insert(BasisWord{std::string(text), source, 0});
}

bool Basis::erase(std::string_view text) {
  auto it = words_.find(text);
  if (it == words_.end()) return false;
  words_.erase(it);
  is_orthogonal_.reset();
  return true;
}

bool Basis::contains(std::string_view text) const {
  return words_.find(text) != words_.end();
}

const BasisWord* Basis::find(std::string_view text) const {
  auto it = words_.find(text);
  return it == words_.end() ? nullptr : &it->second;
}

std::vector<std::string> Basis::texts() const {
  std::vector<std::string> out;
  out.reserve(words_.size());
  for (const auto& kv : words_) out.push_back(kv.first);
  return out;
}

std::vector<BasisWord> Basis::words() const {
  std::vector<BasisWord> out;
  out.reserve(words_.size());
  for (const auto& kv : words_) out.push_back(kv.second);
  return out;
}

}  // namespace basislex
