#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "basislex/basis.h"

namespace basislex {

enum class SegmentKind { kExisting, kNew };

struct Segment {
  std::string text;
  SegmentKind kind = SegmentKind::kNew;
  std::size_t start = 0;
  std::size_t length = 0;

  std::size_t end() const { return start + length; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

// One way of writing a name as a concatenation of segments.
struct SequenceCandidate {
  std::string name;
  std::vector<Segment> segments;

  int eta_total() const { return static_cast<int>(segments.size()); }
  int eta_new() const;
  int eta_existing() const { return eta_total() - eta_new(); }
  int eta_joins() const { return eta_total() - 1; }

  // Interior cut positions, ascending. Two candidates for the same name are
  // the same tiling iff their cuts are equal.
  std::vector<std::size_t> cuts() const;
  std::vector<std::string> words() const;

  friend bool operator==(const SequenceCandidate&, const SequenceCandidate&) = default;
};

// Ascending segment count, then lexicographic cut positions.
bool canonical_less(const SequenceCandidate& a, const SequenceCandidate& b);

struct Occurrence {
  std::string word;
  std::vector<std::size_t> offsets;  // ascending, overlapping occurrences included

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// Basis words that occur in `name` (the whole name included), ordered by word.
std::vector<Occurrence> candidate_words(std::string_view name, const WordSet& basis);
std::vector<Occurrence> candidate_words(std::string_view name, const Basis& basis);

// Occurrences of basis words across a list of names, in both directions:
// per name (the candidate set of that name) and per word.
class SubstringIndex {
 public:
  struct Hit {
    std::size_t name_index;
    std::vector<std::size_t> offsets;
  };

  SubstringIndex(const WordSet& basis, std::vector<std::string> names);

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Occurrence>& candidates(std::size_t name_index) const {
    return per_name_[name_index];
  }
  // Names containing `word`, by name index; empty if the word never occurs.
  std::vector<Hit> occurrences(std::string_view word) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Occurrence>> per_name_;
};

inline constexpr std::size_t kDefaultSequenceCap = 5000;

// Every tiling obtained by placing a set of non-overlapping candidate
// occurrences and filling each maximal uncovered run with a single new
// segment. A run that happens to equal an occurrence at the same offset is
// the tiling that places that occurrence, so every tiling appears once. The
// all-new tiling (whole name, one segment) is always included. When more
// than `cap` tilings exist, the `cap` with the fewest segments are kept.
// Output is in canonical order.
std::vector<SequenceCandidate> enumerate_with_basis(std::string_view name,
                                                    const std::vector<Occurrence>& candidates,
                                                    std::size_t cap = kDefaultSequenceCap);

// Every composition of `name` into segments of at least `min_segment`
// letters, all marked new. The unsplit name is included only with
// `include_whole`. A cap of 0 means unbounded; otherwise the `cap` tilings
// with the fewest segments are kept. Output is in canonical order.
std::vector<SequenceCandidate> enumerate_all(std::string_view name, int min_segment = 2,
                                             bool include_whole = true, std::size_t cap = 0);

}  // namespace basislex
