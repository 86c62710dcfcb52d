#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "basislex/segmenter.h"

namespace basislex {

struct FeatureVector {
  double mu = 0.0;    // mean segment length
  double nu = 0.0;    // population variance of segment lengths
  double p_av = 0.0;  // mean percentage demand over all segments
  std::optional<double> f_av;   // mean corpus demand of the new segments
  std::optional<double> sa_av;  // fraction of new segments passing syntax
  int eta_new = 0;
  int eta_total = 0;
  int eta_joins = 0;
  int length = 0;
};

// Four non-negative weights summing to one. For the grow/prune search the
// fourth weight scales the new-word term; for the exhaustive search it
// scales the syntax term.
class WeightSet {
 public:
  static constexpr double kSumTolerance = 1e-9;

  // Throws ValidationError unless every weight is in [0, 1] and they sum to 1.
  WeightSet(double mu, double nu, double demand, double fourth);

  static WeightSet grow_prune_default() { return {0.4, 0.2, 0.1, 0.3}; }
  static WeightSet exhaustive_default() { return {0.4, 0.3, 0.3, 0.0}; }

  double mu() const { return mu_; }
  double nu() const { return nu_; }
  double demand() const { return demand_; }
  double fourth() const { return fourth_; }

  friend bool operator==(const WeightSet&, const WeightSet&) = default;

 private:
  double mu_, nu_, demand_, fourth_;
};

struct CostOptions {
  // Stands in for 1/0 when a reciprocal feature is zero.
  double penalty = 1e6;
  // Use lambda_p / P_av instead of lambda_p * P_av.
  bool pav_inverted = false;
};

using DemandMap = std::map<std::string, double, std::less<>>;

// pd_k for every distinct word used by `sequences`: the fraction of the
// sequences containing it at least once.
DemandMap sequence_demand(std::span<const SequenceCandidate> sequences);

// `demand` must cover every segment and `new_word_freq`, when given, every
// new segment; without it F_av is left unset. `syntax_ok` is aligned with
// seq.segments; entries for existing segments are ignored. Throws
// ValidationError on a missing entry.
FeatureVector compute_features(const SequenceCandidate& seq, const DemandMap& demand,
                               const DemandMap* new_word_freq,
                               const std::vector<bool>& syntax_ok);

// lambda_mu/mu + lambda_nu*nu + lambda_p*P_av + lambda_eta*eta_new*(1/F_av + 1/SA_av)
double cost_grow_prune(const FeatureVector& fv, const WeightSet& w, const CostOptions& opt = {});

// lambda_mu/mu + lambda_nu*nu + lambda_p*P_av + lambda_s/SA_av
double cost_exhaustive(const FeatureVector& fv, const WeightSet& w, const CostOptions& opt = {});

// Index of the cheapest candidate. Equal costs fall back to fewer new
// segments, then fewer joins, then lexicographic cut positions.
// Throws ValidationError on empty input or a size mismatch.
std::size_t select_best(std::span<const SequenceCandidate> candidates,
                        std::span<const double> costs);

}  // namespace basislex
