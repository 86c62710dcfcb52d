#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "basislex/basis.h"
#include "basislex/corpus.h"
#include "basislex/features.h"
#include "basislex/ortho.h"
#include "basislex/segmenter.h"
#include "basislex/syntax.h"

namespace basislex {

enum class Algorithm {
  kGrowPrune,   // seeded grow/prune iterations
  kExhaustive,  // single pass over every composition of every name
};

// Which basis size enters the global cost of an iteration.
enum class CostBasis {
  kOrthogonal,  // size after orthogonalization
  kPreOrtho,    // size of the grown basis before orthogonalization
};

struct IterationStats {
  int iteration = 0;
  std::int64_t b_m_size = 0;  // grown basis, before orthogonalization
  std::int64_t b_size = 0;    // after orthogonalization
  std::int64_t j_total = 0;   // joins over the chosen segmentations
  double cost = 0.0;
  double b_m_times_j = 0.0;

  friend bool operator==(const IterationStats&, const IterationStats&) = default;
};

struct RunConfig {
  Algorithm algorithm = Algorithm::kGrowPrune;
  double seed_percent = 0.40;
  std::int64_t epsilon = 0;
  int max_iterations = 20;
  // Unset means the algorithm's default weight set.
  std::optional<WeightSet> weights;
  std::size_t sequence_cap = kDefaultSequenceCap;
  int min_segment = 2;
  bool include_whole = true;
  OrthoOptions ortho;
  CostOptions cost;
  CostBasis cost_basis = CostBasis::kOrthogonal;
  CharClassTable char_classes;
  // 0 = hardware concurrency. Results never depend on this.
  unsigned threads = 1;
  std::function<void(const std::string&)> on_warning;

  WeightSet effective_weights() const;
  // Throws ValidationError on out-of-range settings.
  void validate() const;
};

// |B| * (1 + |J| / |N|)
double global_cost(std::int64_t b_size, std::int64_t j_total, std::int64_t n_total);

// The two extremes: the corpus alphabet with every name spelled letter by
// letter, and every name as its own basis word with no joins.
double trivial_cost_letters(const Corpus& corpus);
double trivial_cost_whole_names(const Corpus& corpus);

struct SeedResult {
  Basis seeded;      // names passing the frequency threshold
  Basis basis;       // after orthogonalization
  bool fell_back = false;
};

// Names with frequency >= k * max_frequency, then make_ortho. Falls back to
// the single most frequent name (with a warning) if none passes.
SeedResult seed_basis(const Corpus& corpus, double k, const RunConfig& cfg = {});

struct IterationResult {
  Basis grown;
  Basis orthogonal;
  IterationStats stats;
  std::vector<SequenceCandidate> chosen;  // one per name, corpus order
};

IterationResult run_iteration_grow_prune(const Corpus& corpus, const Basis& b_init,
                                         const RunConfig& cfg, int iteration = 1);

struct NameSegmentation {
  std::string name;
  std::vector<std::string> words;
};

struct RunResult {
  Basis basis;
  std::vector<IterationStats> trace;
  // Segmentations chosen in the final iteration, against the grown basis.
  std::vector<SequenceCandidate> chosen;
  // Every name rewritten over the final basis with the fewest words.
  std::vector<NameSegmentation> segmentations;
  std::int64_t final_joins = 0;
  double final_cost = 0.0;  // global_cost(|basis|, final_joins, |N|)
  bool converged = true;
  std::optional<SeedResult> seed;
};

RunResult run_grow_prune(const Corpus& corpus, const RunConfig& cfg);
RunResult run_exhaustive(const Corpus& corpus, const RunConfig& cfg);
RunResult run(const Corpus& corpus, const RunConfig& cfg);

// Segments every name over `basis` with the fewest words. Throws
// ValidationError naming the first name the basis cannot build.
std::vector<NameSegmentation> segment_corpus(const Corpus& corpus, const Basis& basis);

struct ConvergenceStep {
  int from_iteration = 0;
  int to_iteration = 0;
  bool basis_non_increasing = false;    // |B_{n+1}| <= |B_n|
  bool product_non_increasing = false;  // |B_m||J| at n+1 <= at n
};

struct ConvergenceReport {
  std::vector<ConvergenceStep> steps;  // empty when the trace has < 2 rows
  bool sufficient() const { return !steps.empty(); }
  bool all_pass() const;
};

ConvergenceReport check_convergence(std::span<const IterationStats> trace);

struct GridRow {
  WeightSet weights;
  double cost = 0.0;
  std::int64_t basis_size = 0;
  std::int64_t joins = 0;
};

struct GridSearchResult {
  WeightSet best;
  std::vector<GridRow> table;  // lexicographic weight order
};

// All weight tuples on the simplex with spacing `grid_step`, each run
// through cfg.algorithm. Best = lowest final cost, then smaller basis,
// then lexicographic tuple.
std::vector<WeightSet> weight_grid(double grid_step);
GridSearchResult grid_search_weights(const Corpus& corpus, const RunConfig& cfg,
                                     double grid_step = 0.1);

}  // namespace basislex
