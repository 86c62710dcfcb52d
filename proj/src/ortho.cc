#include "basislex/ortho.h"

#include <algorithm>
#include <limits>

namespace basislex {

bool is_constructible(std::string_view word, const WordSet& others) {
  const std::size_t n = word.size();
  if (n == 0 || others.empty()) return false;
  const std::size_t max_len = others.max_length();
  std::vector<char> reach(n + 1, 0);
  reach[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!reach[i]) continue;
    const std::size_t limit = std::min(max_len, n - i);
    for (std::size_t len = 1; len <= limit; ++len) {
      if (!reach[i + len] && others.contains(word.substr(i, len))) reach[i + len] = 1;
    }
    if (reach[n]) return true;
  }
  return reach[n] != 0;
}

std::uint64_t count_constructions(std::string_view word, const WordSet& others) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::size_t n = word.size();
  if (n == 0 || others.empty()) return 0;
  const std::size_t max_len = others.max_length();
  std::vector<std::uint64_t> ways(n + 1, 0);
  ways[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (ways[i] == 0) continue;
    const std::size_t limit = std::min(max_len, n - i);
    for (std::size_t len = 1; len <= limit; ++len) {
      if (!others.contains(word.substr(i, len))) continue;
      auto& dst = ways[i + len];
      dst = (kMax - dst < ways[i]) ? kMax : dst + ways[i];
    }
  }
  return ways[n];
}

std::optional<std::vector<std::string>> find_construction(std::string_view word,
                                                          const WordSet& others) {
  const std::size_t n = word.size();
  if (n == 0 || others.empty()) return std::nullopt;
  const std::size_t max_len = others.max_length();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  // parts[i]: fewest parts tiling word[i..n); next[i]: end of the first part.
  std::vector<std::size_t> parts(n + 1, kInf), next(n + 1, 0);
  parts[n] = 0;
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t limit = std::min(max_len, n - i);
    for (std::size_t len = 1; len <= limit; ++len) {
      if (parts[i + len] == kInf || !others.contains(word.substr(i, len))) continue;
      // Shorter first part wins ties: smallest first cut.
      if (parts[i + len] + 1 < parts[i]) {
        parts[i] = parts[i + len] + 1;
        next[i] = i + len;
      }
    }
  }
  if (parts[0] == kInf) return std::nullopt;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; i = next[i]) out.emplace_back(word.substr(i, next[i] - i));
  return out;
}

bool is_constructible_greedy(std::string_view word, const WordSet& others) {
  const std::size_t n = word.size();
  std::vector<std::string> subs;
  for (const auto& w : others.sorted()) {
    if (w.size() <= n && word.find(w) != std::string_view::npos) subs.push_back(w);
  }
  if (subs.empty()) return false;
  std::stable_sort(subs.begin(), subs.end(),
                   [](const std::string& a, const std::string& b) { return a.size() > b.size(); });

  for (const auto& pinned : subs) {
    std::vector<char> covered(n, 0);
    const auto at = word.find(pinned);
    std::fill_n(covered.begin() + static_cast<std::ptrdiff_t>(at), pinned.size(), 1);
    for (const auto& fill : subs) {
      for (auto pos = word.find(fill); pos != std::string_view::npos;
           pos = word.find(fill, pos + 1)) {
        const auto first = covered.begin() + static_cast<std::ptrdiff_t>(pos);
        const auto last = first + static_cast<std::ptrdiff_t>(fill.size());
        if (std::none_of(first, last, [](char c) { return c != 0; })) std::fill(first, last, 1);
      }
    }
    if (std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; })) return true;
  }
  return false;
}

OrthoReport is_ortho(const std::vector<std::string>& words) {
  WordSet set(words);
  std::vector<std::string> sorted = set.sorted();
  OrthoReport report;
  for (const auto& w : sorted) {
    set.erase(w);
    if (auto parts = find_construction(w, set)) {
      report.orthogonal = false;
      report.witnesses.push_back({w, std::move(*parts)});
    }
    set.insert(w);
  }
  return report;
}

OrthoReport is_ortho(const Basis& basis) {
  auto report = is_ortho(basis.texts());
  basis.set_cached_orthogonal(report.orthogonal);
  return report;
}

namespace {

bool check(std::string_view word, const WordSet& others, OrthoCheck mode) {
  return mode == OrthoCheck::kExact ? is_constructible(word, others)
                                    : is_constructible_greedy(word, others);
}

}  // namespace

OrthoResult make_ortho_detailed(const Basis& basis, const OrthoOptions& options) {
  std::vector<std::string> order = basis.texts();
  std::stable_sort(order.begin(), order.end(), [](const std::string& a, const std::string& b) {
    return a.size() > b.size();
  });

  OrthoResult result;
  WordSet remaining(order);
  std::vector<std::string> keep;  // words put back by the guard; never revisited

  // Each pass is bounded by the basis size; the guard can only reinstate.
  for (std::size_t pass = 0; pass <= order.size(); ++pass) {
    std::vector<std::string> removed;
    for (const auto& w : order) {
      if (!remaining.contains(w)) continue;
      if (std::find(keep.begin(), keep.end(), w) != keep.end()) continue;
      remaining.erase(w);
      if (check(w, remaining, options.check)) {
        removed.push_back(w);
      } else {
        remaining.insert(w);
      }
    }
    result.removed.insert(result.removed.end(), removed.begin(), removed.end());

    bool changed = false;
    for (const auto& w : result.removed) {
      if (remaining.contains(w) || is_constructible(w, remaining)) continue;
      remaining.insert(w);
      keep.push_back(w);
      result.reinstated.push_back(w);
      changed = true;
    }
    if (!changed) break;
    std::erase_if(result.removed, [&](const std::string& w) { return remaining.contains(w); });
  }

  for (const auto& bw : basis.words()) {
    if (remaining.contains(bw.text)) result.basis.insert(bw);
  }
  if (options.check == OrthoCheck::kExact && result.reinstated.empty()) {
    result.basis.set_cached_orthogonal(true);
  }
  return result;
}

Basis make_ortho(const Basis& basis, const OrthoOptions& options) {
  return make_ortho_detailed(basis, options).basis;
}

}  // namespace basislex
