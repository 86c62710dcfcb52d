#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "basislex/basis.h"

namespace basislex {

// True iff `word` is a concatenation of one or more members of `others`
// (members may repeat). Exact prefix-reachability over positions 0..L.
// The caller is responsible for removing `word` itself from `others`.
bool is_constructible(std::string_view word, const WordSet& others);

// Number of distinct boundary sets that tile `word` with members of
// `others`. Saturates at UINT64_MAX.
std::uint64_t count_constructions(std::string_view word, const WordSet& others);

// One tiling of `word` with members of `others`: fewest parts, then the
// lexicographically smallest cut positions. nullopt when none exists.
std::optional<std::vector<std::string>> find_construction(std::string_view word,
                                                          const WordSet& others);

// The positional-fill procedure: each substring member is pinned at its first
// occurrence and the rest of the word is filled greedily with members taken
// longest-first. Can miss tilings that the exact check finds, never reports
// one that does not exist.
bool is_constructible_greedy(std::string_view word, const WordSet& others);

struct OrthoWitness {
  std::string word;
  std::vector<std::string> parts;
};

struct OrthoReport {
  bool orthogonal = true;
  std::vector<OrthoWitness> witnesses;  // ordered by word
};

OrthoReport is_ortho(const std::vector<std::string>& words);
OrthoReport is_ortho(const Basis& basis);

enum class OrthoCheck {
  kExact,  // dynamic-programming reachability
  kPositional,  // is_constructible_greedy
};

struct OrthoOptions {
  OrthoCheck check = OrthoCheck::kExact;
};

struct OrthoResult {
  Basis basis;
  std::vector<std::string> removed;     // in removal order
  std::vector<std::string> reinstated;  // words put back by the spanning guard
};

// Visits words longest-first (ties lexicographic) and deletes every word
// that can be built from what currently remains. Afterwards each removed
// word is re-verified against the survivors with the exact check and
// reinstated if it no longer builds, repeating until nothing changes.
OrthoResult make_ortho_detailed(const Basis& basis, const OrthoOptions& options = {});
Basis make_ortho(const Basis& basis, const OrthoOptions& options = {});

}  // namespace basislex
