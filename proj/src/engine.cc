#include "basislex/engine.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "basislex/error.h"
#include "parallel.h"

namespace basislex {

WeightSet RunConfig::effective_weights() const {
  if (weights) return *weights;
  return algorithm == Algorithm::kGrowPrune ? WeightSet::grow_prune_default()
                                            : WeightSet::exhaustive_default();
}

void RunConfig::validate() const {
  if (!(seed_percent > 0.0 && seed_percent <= 1.0)) {
    throw ValidationError("seed_percent must be in (0, 1]");
  }
  if (epsilon < 0) throw ValidationError("epsilon must be >= 0");
  if (max_iterations < 1) throw ValidationError("max_iterations must be >= 1");
  if (sequence_cap < 1) throw ValidationError("sequence_cap must be >= 1");
  if (min_segment < 1) throw ValidationError("min_segment must be >= 1");
  if (!(cost.penalty > 0.0)) throw ValidationError("penalty must be positive");
}

double global_cost(std::int64_t b_size, std::int64_t j_total, std::int64_t n_total) {
  if (n_total < 1) throw ValidationError("global cost needs at least one name");
  return static_cast<double>(b_size) *
         (1.0 + static_cast<double>(j_total) / static_cast<double>(n_total));
}

double trivial_cost_letters(const Corpus& corpus) {
  std::set<char> letters;
  std::int64_t joins = 0;
  for (const auto& r : corpus.records()) {
    letters.insert(r.surface.begin(), r.surface.end());
    joins += static_cast<std::int64_t>(r.surface.size()) - 1;
  }
  const auto n = static_cast<std::int64_t>(corpus.total_unique());
  return global_cost(static_cast<std::int64_t>(letters.size()), joins, n);
}

double trivial_cost_whole_names(const Corpus& corpus) {
  const auto n = static_cast<std::int64_t>(corpus.total_unique());
  return global_cost(n, 0, n);
}

namespace {

void warn(const RunConfig& cfg, const std::string& msg) {
  if (cfg.on_warning) cfg.on_warning(msg);
}

std::vector<std::string> surfaces(const Corpus& corpus) {
  std::vector<std::string> out;
  for (auto& r : corpus.records()) out.push_back(std::move(r.surface));
  return out;
}

std::vector<bool> syntax_bits(const SequenceCandidate& seq, const CharClassTable& table) {
  std::vector<bool> bits(seq.segments.size(), true);
  for (std::size_t i = 0; i < seq.segments.size(); ++i) {
    const auto& s = seq.segments[i];
    if (s.kind == SegmentKind::kNew) bits[i] = accepts_syntax(s.text, Placement{seq.name, s.start}, table);
  }
  return bits;
}

// Scores every sequence of one name and returns the cheapest.
template <typename CostFn>
SequenceCandidate choose(const std::vector<SequenceCandidate>& seqs, const DemandMap* freq,
                         const RunConfig& cfg, CostFn cost_fn) {
  const auto demand = sequence_demand(seqs);
  std::vector<double> costs;
  costs.reserve(seqs.size());
  for (const auto& seq : seqs) {
    costs.push_back(cost_fn(compute_features(seq, demand, freq, syntax_bits(seq, cfg.char_classes))));
  }
  return seqs[select_best(seqs, costs)];
}

std::int64_t count_joins(const std::vector<SequenceCandidate>& chosen) {
  std::int64_t j = 0;
  for (const auto& c : chosen) j += c.eta_joins();
  return j;
}

IterationStats make_stats(int iteration, std::int64_t b_m, std::int64_t b, std::int64_t j,
                          std::int64_t n, CostBasis basis) {
  IterationStats st;
  st.iteration = iteration;
  st.b_m_size = b_m;
  st.b_size = b;
  st.j_total = j;
  st.b_m_times_j = static_cast<double>(b_m) * static_cast<double>(j);
  st.cost = global_cost(basis == CostBasis::kPreOrtho ? b_m : b, j, n);
  return st;
}

void finish(RunResult& result, const Corpus& corpus) {
  result.segmentations = segment_corpus(corpus, result.basis);
  result.final_joins = 0;
  for (const auto& s : result.segmentations) {
    result.final_joins += static_cast<std::int64_t>(s.words.size()) - 1;
  }
  result.final_cost = global_cost(static_cast<std::int64_t>(result.basis.size()),
                                  result.final_joins,
                                  static_cast<std::int64_t>(corpus.total_unique()));
}

}  // namespace

SeedResult seed_basis(const Corpus& corpus, double k, const RunConfig& cfg) {
  if (!(k > 0.0 && k <= 1.0)) throw ValidationError("seed fraction must be in (0, 1]");
  if (corpus.empty()) throw ValidationError("empty corpus");
  SeedResult out;
  const auto ranked = frequency_rank(corpus);
  const double threshold = k * static_cast<double>(corpus.max_frequency());
  for (const auto& r : ranked) {
    // Relative slack so that e.g. 0.4 * 10 admits a count of exactly 4.
    if (static_cast<double>(r.frequency) < threshold * (1.0 - 1e-12)) break;
    out.seeded.insert(BasisWord{r.surface, WordSource::kSeed, r.frequency});
  }
  if (out.seeded.empty()) {
    out.fell_back = true;
    warn(cfg, "no name reaches the seed threshold; seeding with '" + ranked.front().surface + "'");
    out.seeded.insert(BasisWord{ranked.front().surface, WordSource::kSeed, ranked.front().frequency});
  }
  out.basis = make_ortho(out.seeded, cfg.ortho);
  return out;
}

IterationResult run_iteration_grow_prune(const Corpus& corpus, const Basis& b_init,
                                         const RunConfig& cfg, int iteration) {
  const auto names = surfaces(corpus);
  const std::size_t n = names.size();
  const WordSet init = b_init.word_set();
  const WeightSet weights = cfg.effective_weights();

  // Pass 1: every new word any sequence of a name asks for, once per name.
  std::vector<std::vector<std::string>> demanded(n);
  detail::parallel_for(n, cfg.threads, [&](std::size_t i) {
    const auto seqs = enumerate_with_basis(names[i], candidate_words(names[i], init), cfg.sequence_cap);
    std::set<std::string> words;
    for (const auto& seq : seqs) {
      for (const auto& s : seq.segments) {
        if (s.kind == SegmentKind::kNew) words.insert(s.text);
      }
    }
    demanded[i].assign(words.begin(), words.end());
  });
  std::map<std::string, std::int64_t, std::less<>> name_counts;
  for (const auto& words : demanded) {
    for (const auto& w : words) ++name_counts[w];
  }
  DemandMap freq;
  for (const auto& [w, c] : name_counts) freq[w] = static_cast<double>(c) / static_cast<double>(n);

  // Pass 2: cost every sequence now that f_k is known and keep the cheapest.
  IterationResult result;
  result.chosen.resize(n);
  detail::parallel_for(n, cfg.threads, [&](std::size_t i) {
    const auto seqs = enumerate_with_basis(names[i], candidate_words(names[i], init), cfg.sequence_cap);
    result.chosen[i] = choose(seqs, &freq, cfg, [&](const FeatureVector& fv) {
      return cost_grow_prune(fv, weights, cfg.cost);
    });
  });

  result.grown = b_init;
  for (const auto& seq : result.chosen) {
    for (const auto& s : seq.segments) {
      if (s.kind != SegmentKind::kNew || result.grown.contains(s.text)) continue;
      result.grown.insert(BasisWord{s.text, WordSource::kMined, name_counts[s.text]});
    }
  }
  result.orthogonal = make_ortho(result.grown, cfg.ortho);
  result.stats = make_stats(iteration, static_cast<std::int64_t>(result.grown.size()),
                            static_cast<std::int64_t>(result.orthogonal.size()),
                            count_joins(result.chosen), static_cast<std::int64_t>(n),
                            cfg.cost_basis);
  return result;
}

RunResult run_grow_prune(const Corpus& corpus, const RunConfig& cfg) {
  cfg.validate();
  if (corpus.empty()) throw ValidationError("empty corpus");
  RunResult result;
  result.seed = seed_basis(corpus, cfg.seed_percent, cfg);
  Basis current = result.seed->basis;
  result.converged = false;
  for (int it = 1; it <= cfg.max_iterations; ++it) {
    auto step = run_iteration_grow_prune(corpus, current, cfg, it);
    const auto growth = static_cast<std::int64_t>(step.grown.size()) -
                        static_cast<std::int64_t>(current.size());
    result.trace.push_back(step.stats);
    result.chosen = std::move(step.chosen);
    current = std::move(step.orthogonal);
    if (growth <= cfg.epsilon) {
      result.converged = true;
      break;
    }
  }
  if (!result.converged) {
    warn(cfg, "stopped after " + std::to_string(cfg.max_iterations) +
                  " iterations without converging");
  }
  result.basis = std::move(current);
  finish(result, corpus);
  return result;
}

RunResult run_exhaustive(const Corpus& corpus, const RunConfig& cfg) {
  cfg.validate();
  if (corpus.empty()) throw ValidationError("empty corpus");
  const auto names = surfaces(corpus);
  const std::size_t n = names.size();
  const WeightSet weights = cfg.effective_weights();

  RunResult result;
  result.chosen.resize(n);
  detail::parallel_for(n, cfg.threads, [&](std::size_t i) {
    auto seqs = enumerate_all(names[i], cfg.min_segment, cfg.include_whole, cfg.sequence_cap);
    if (seqs.empty()) {
      seqs.push_back({names[i], {{names[i], SegmentKind::kNew, 0, names[i].size()}}});
    }
    result.chosen[i] = choose(seqs, nullptr, cfg, [&](const FeatureVector& fv) {
      return cost_exhaustive(fv, weights, cfg.cost);
    });
  });

  Basis grown;
  std::map<std::string, std::int64_t, std::less<>> users;
  for (const auto& seq : result.chosen) {
    std::set<std::string_view> seen;
    for (const auto& s : seq.segments) {
      if (seen.insert(s.text).second) ++users[s.text];
    }
  }
  for (const auto& [w, c] : users) grown.insert(BasisWord{w, WordSource::kMined, c});
  result.basis = make_ortho(grown, cfg.ortho);
  result.trace.push_back(make_stats(1, static_cast<std::int64_t>(grown.size()),
                                    static_cast<std::int64_t>(result.basis.size()),
                                    count_joins(result.chosen), static_cast<std::int64_t>(n),
                                    cfg.cost_basis));
  finish(result, corpus);
  return result;
}

RunResult run(const Corpus& corpus, const RunConfig& cfg) {
  return cfg.algorithm == Algorithm::kGrowPrune ? run_grow_prune(corpus, cfg)
                                                : run_exhaustive(corpus, cfg);
}

std::vector<NameSegmentation> segment_corpus(const Corpus& corpus, const Basis& basis) {
  const WordSet words = basis.word_set();
  std::vector<NameSegmentation> out;
  for (const auto& r : corpus.records()) {
    auto parts = find_construction(r.surface, words);
    if (!parts) throw ValidationError("basis does not span '" + r.surface + "'");
    out.push_back({r.surface, std::move(*parts)});
  }
  return out;
}

bool ConvergenceReport::all_pass() const {
  return std::all_of(steps.begin(), steps.end(), [](const ConvergenceStep& s) {
    return s.basis_non_increasing && s.product_non_increasing;
  });
}

ConvergenceReport check_convergence(std::span<const IterationStats> trace) {
  ConvergenceReport report;
  for (std::size_t i = 1; i < trace.size(); ++i) {
    const auto& a = trace[i - 1];
    const auto& b = trace[i];
    report.steps.push_back({a.iteration, b.iteration, b.b_size <= a.b_size,
                            b.b_m_times_j <= a.b_m_times_j});
  }
  return report;
}

std::vector<WeightSet> weight_grid(double grid_step) {
  if (!(grid_step > 0.0 && grid_step <= 1.0)) throw ValidationError("grid step must be in (0, 1]");
  const double parts = 1.0 / grid_step;
  const auto n = static_cast<int>(std::lround(parts));
  if (std::abs(parts - n) > 1e-9 * parts) throw ValidationError("grid step must divide 1 evenly");
  std::vector<WeightSet> out;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b) {
      for (int c = 0; a + b + c <= n; ++c) {
        const int d = n - a - b - c;
        out.emplace_back(double(a) / n, double(b) / n, double(c) / n, double(d) / n);
      }
    }
  }
  return out;
}

GridSearchResult grid_search_weights(const Corpus& corpus, const RunConfig& cfg, double grid_step) {
  const auto grid = weight_grid(grid_step);
  std::vector<GridRow> table;
  table.reserve(grid.size());
  std::size_t best = 0;
  for (const auto& w : grid) {
    RunConfig local = cfg;
    local.weights = w;
    const auto res = run(corpus, local);
    table.push_back({w, res.final_cost, static_cast<std::int64_t>(res.basis.size()), res.final_joins});
    const auto& cand = table.back();
    const auto& cur = table[best];
    // Grid order is already lexicographic, so earlier rows win exact ties.
    if (cand.cost < cur.cost || (cand.cost == cur.cost && cand.basis_size < cur.basis_size)) {
      best = table.size() - 1;
    }
  }
  return {table[best].weights, std::move(table)};
}

}  // namespace basislex
