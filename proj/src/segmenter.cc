#include "basislex/segmenter.h"

#include <algorithm>
#include <limits>
#include <map>

#include "basislex/error.h"

namespace basislex {

int SequenceCandidate::eta_new() const {
  return static_cast<int>(std::count_if(segments.begin(), segments.end(), [](const Segment& s) {
    return s.kind == SegmentKind::kNew;
  }));
}

std::vector<std::size_t> SequenceCandidate::cuts() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < segments.size(); ++i) out.push_back(segments[i].start);
  return out;
}

std::vector<std::string> SequenceCandidate::words() const {
  std::vector<std::string> out;
  out.reserve(segments.size());
  for (const auto& s : segments) out.push_back(s.text);
  return out;
}

bool canonical_less(const SequenceCandidate& a, const SequenceCandidate& b) {
  if (a.segments.size() != b.segments.size()) return a.segments.size() < b.segments.size();
  return a.cuts() < b.cuts();
}

std::vector<Occurrence> candidate_words(std::string_view name, const WordSet& basis) {
  std::map<std::string, std::vector<std::size_t>, std::less<>> found;
  const std::size_t n = name.size();
  const std::size_t max_len = std::min(basis.max_length(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t len = 1; len <= max_len && i + len <= n; ++len) {
      const auto sub = name.substr(i, len);
      if (basis.contains(sub)) found[std::string(sub)].push_back(i);
    }
  }
  std::vector<Occurrence> out;
  out.reserve(found.size());
  for (auto& [word, offsets] : found) out.push_back({word, std::move(offsets)});
  return out;
}

std::vector<Occurrence> candidate_words(std::string_view name, const Basis& basis) {
  return candidate_words(name, basis.word_set());
}

SubstringIndex::SubstringIndex(const WordSet& basis, std::vector<std::string> names)
    : names_(std::move(names)) {
  per_name_.reserve(names_.size());
  for (const auto& n : names_) per_name_.push_back(candidate_words(n, basis));
}

std::vector<SubstringIndex::Hit> SubstringIndex::occurrences(std::string_view word) const {
  std::vector<Hit> out;
  for (std::size_t i = 0; i < per_name_.size(); ++i) {
    const auto& occ = per_name_[i];
    auto it = std::lower_bound(occ.begin(), occ.end(), word,
                               [](const Occurrence& o, std::string_view w) { return o.word < w; });
    if (it != occ.end() && it->word == word) out.push_back({i, it->offsets});
  }
  return out;
}

namespace {

// Tilings of [0, L) are paths through states (position, previous segment was
// new). Edges are listed per state in ascending end position, so a
// depth-first walk visits paths of a fixed length in lexicographic cut order.
class TilingLattice {
 public:
  struct Edge {
    std::size_t to;
    SegmentKind kind;
  };

  explicit TilingLattice(std::size_t length)
      : length_(length), edges_(2 * (length + 1)) {}

  std::size_t state(std::size_t pos, bool after_new) const { return 2 * pos + (after_new ? 1 : 0); }
  void add_edge(std::size_t pos, bool after_new, Edge e) { edges_[state(pos, after_new)].push_back(e); }

  std::vector<SequenceCandidate> enumerate(std::string_view name, std::size_t cap) {
    for (auto& list : edges_) {
      std::sort(list.begin(), list.end(), [](const Edge& a, const Edge& b) { return a.to < b.to; });
    }
    count_paths();
    std::vector<SequenceCandidate> out;
    const std::size_t limit = cap == 0 ? std::numeric_limits<std::size_t>::max() : cap;
    std::vector<Segment> path;
    for (std::size_t k = 1; k <= length_ && out.size() < limit; ++k) {
      if (ways(state(0, false), k) == 0) continue;
      walk(name, 0, false, k, path, out, limit);
    }
    return out;
  }

 private:
  static constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

  std::uint64_t ways(std::size_t st, std::size_t k) const { return ways_[st * (length_ + 1) + k]; }

  void count_paths() {
    ways_.assign(edges_.size() * (length_ + 1), 0);
    ways_[state(length_, false) * (length_ + 1)] = 1;
    ways_[state(length_, true) * (length_ + 1)] = 1;
    for (std::size_t pos = length_; pos-- > 0;) {
      for (bool after_new : {false, true}) {
        const auto st = state(pos, after_new);
        for (const auto& e : edges_[st]) {
          const auto nx = state(e.to, e.kind == SegmentKind::kNew);
          for (std::size_t k = 1; k <= length_; ++k) {
            auto& dst = ways_[st * (length_ + 1) + k];
            const auto add = ways(nx, k - 1);
            dst = (kSat - dst < add) ? kSat : dst + add;
          }
        }
      }
    }
  }

  void walk(std::string_view name, std::size_t pos, bool after_new, std::size_t k,
            std::vector<Segment>& path, std::vector<SequenceCandidate>& out, std::size_t limit) {
    if (out.size() >= limit) return;
    if (pos == length_) {
      out.push_back({std::string(name), path});
      return;
    }
    for (const auto& e : edges_[state(pos, after_new)]) {
      const bool next_new = e.kind == SegmentKind::kNew;
      if (ways(state(e.to, next_new), k - 1) == 0) continue;
      path.push_back({std::string(name.substr(pos, e.to - pos)), e.kind, pos, e.to - pos});
      walk(name, e.to, next_new, k - 1, path, out, limit);
      path.pop_back();
      if (out.size() >= limit) return;
    }
  }

  std::size_t length_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<std::uint64_t> ways_;
};

}  // namespace

std::vector<SequenceCandidate> enumerate_with_basis(std::string_view name,
                                                    const std::vector<Occurrence>& candidates,
                                                    std::size_t cap) {
  if (cap < 1) throw ValidationError("sequence cap must be >= 1");
  const std::size_t n = name.size();
  if (n == 0) return {};

  // existing_end[p]: end positions of occurrences starting at p.
  std::vector<std::vector<std::size_t>> existing_end(n);
  std::vector<char> is_start(n + 1, 0);
  is_start[n] = 1;
  for (const auto& occ : candidates) {
    for (auto off : occ.offsets) {
      if (off + occ.word.size() > n || name.substr(off, occ.word.size()) != occ.word) {
        throw ValidationError("'" + occ.word + "' does not occur in '" + std::string(name) +
                              "' at " + std::to_string(off));
      }
      existing_end[off].push_back(off + occ.word.size());
      is_start[off] = 1;
    }
  }

  TilingLattice lattice(n);
  for (std::size_t p = 0; p < n; ++p) {
    auto& ends = existing_end[p];
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    for (bool after_new : {false, true}) {
      for (auto q : ends) lattice.add_edge(p, after_new, {q, SegmentKind::kExisting});
    }
    // A gap runs up to the next placed occurrence (or the end of the name)
    // and is never followed by another gap.
    for (std::size_t q = p + 1; q <= n; ++q) {
      if (!is_start[q]) continue;
      if (std::binary_search(ends.begin(), ends.end(), q)) continue;
      lattice.add_edge(p, false, {q, SegmentKind::kNew});
    }
  }
  return lattice.enumerate(name, cap);
}

std::vector<SequenceCandidate> enumerate_all(std::string_view name, int min_segment,
                                             bool include_whole, std::size_t cap) {
  if (min_segment < 1) throw ValidationError("min_segment must be >= 1");
  const std::size_t n = name.size();
  const auto min_len = static_cast<std::size_t>(min_segment);
  if (n < min_len) return {};
  TilingLattice lattice(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + min_len; q <= n; ++q) {
      if (p == 0 && q == n && !include_whole) continue;
      for (bool after_new : {false, true}) lattice.add_edge(p, after_new, {q, SegmentKind::kNew});
    }
  }
  return lattice.enumerate(name, cap);
}

}  // namespace basislex
