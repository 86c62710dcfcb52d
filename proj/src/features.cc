#include "basislex/features.h"

#include <cassert>
#include <cmath>
#include <set>

#include "basislex/error.h"

namespace basislex {

WeightSet::WeightSet(double mu, double nu, double demand, double fourth)
    : mu_(mu), nu_(nu), demand_(demand), fourth_(fourth) {
  for (double w : {mu, nu, demand, fourth}) {
    if (!(w >= 0.0 && w <= 1.0)) throw ValidationError("weights must lie in [0, 1]");
  }
  if (std::abs(mu + nu + demand + fourth - 1.0) > kSumTolerance) {
    throw ValidationError("weights must sum to 1");
  }
}

DemandMap sequence_demand(std::span<const SequenceCandidate> sequences) {
  DemandMap counts;
  for (const auto& seq : sequences) {
    std::set<std::string_view> seen;
    for (const auto& seg : seq.segments) {
      if (seen.insert(seg.text).second) counts[seg.text] += 1.0;
    }
  }
  if (!sequences.empty()) {
    for (auto& kv : counts) kv.second /= static_cast<double>(sequences.size());
  }
  return counts;
}

FeatureVector compute_features(const SequenceCandidate& seq, const DemandMap& demand,
                               const DemandMap* new_word_freq,
                               const std::vector<bool>& syntax_ok) {
  if (seq.segments.empty()) throw ValidationError("sequence has no segments");
  if (syntax_ok.size() != seq.segments.size()) {
    throw ValidationError("syntax bits do not match the segments of '" + seq.name + "'");
  }
  FeatureVector fv;
  fv.eta_total = seq.eta_total();
  fv.eta_new = seq.eta_new();
  fv.eta_joins = seq.eta_joins();
  for (const auto& s : seq.segments) fv.length += static_cast<int>(s.length);

  const double n = fv.eta_total;
  fv.mu = fv.length / n;
  double var = 0.0, pd_sum = 0.0, f_sum = 0.0;
  int accepted = 0;
  for (std::size_t i = 0; i < seq.segments.size(); ++i) {
    const auto& s = seq.segments[i];
    const double d = static_cast<double>(s.length) - fv.mu;
    var += d * d;
    auto pd = demand.find(s.text);
    if (pd == demand.end()) throw ValidationError("no demand entry for '" + s.text + "'");
    pd_sum += pd->second;
    if (s.kind == SegmentKind::kNew) {
      if (new_word_freq) {
        auto f = new_word_freq->find(s.text);
        if (f == new_word_freq->end()) {
          throw ValidationError("no frequency entry for new word '" + s.text + "'");
        }
        f_sum += f->second;
      }
      accepted += syntax_ok[i] ? 1 : 0;
    }
  }
  fv.nu = var / n;
  fv.p_av = pd_sum / n;
  if (fv.eta_new > 0) {
    if (new_word_freq) fv.f_av = f_sum / fv.eta_new;
    fv.sa_av = static_cast<double>(accepted) / fv.eta_new;
  }
  return fv;
}

namespace {

double reciprocal(double x, double penalty) { return x > 0.0 ? 1.0 / x : penalty; }

double shared_terms(const FeatureVector& fv, const WeightSet& w, const CostOptions& opt) {
  assert(fv.mu > 0.0);
  const double demand_term =
      opt.pav_inverted ? w.demand() * reciprocal(fv.p_av, opt.penalty) : w.demand() * fv.p_av;
  return w.mu() / fv.mu + w.nu() * fv.nu + demand_term;
}

}  // namespace

double cost_grow_prune(const FeatureVector& fv, const WeightSet& w, const CostOptions& opt) {
  double c = shared_terms(fv, w, opt);
  if (fv.eta_new > 0 && w.fourth() > 0.0) {
    const double f = reciprocal(fv.f_av.value_or(0.0), opt.penalty);
    const double sa = reciprocal(fv.sa_av.value_or(0.0), opt.penalty);
    c += w.fourth() * fv.eta_new * (f + sa);
  }
  return c;
}

double cost_exhaustive(const FeatureVector& fv, const WeightSet& w, const CostOptions& opt) {
  double c = shared_terms(fv, w, opt);
  if (w.fourth() > 0.0) c += w.fourth() * reciprocal(fv.sa_av.value_or(1.0), opt.penalty);
  return c;
}

std::size_t select_best(std::span<const SequenceCandidate> candidates,
                        std::span<const double> costs) {
  if (candidates.empty()) throw ValidationError("no candidate sequences");
  if (candidates.size() != costs.size()) throw ValidationError("one cost per candidate required");
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const auto& a = candidates[i];
    const auto& b = candidates[best];
    if (costs[i] != costs[best]) {
      if (costs[i] < costs[best]) best = i;
      continue;
    }
    if (a.eta_new() != b.eta_new()) {
      if (a.eta_new() < b.eta_new()) best = i;
      continue;
    }
    if (a.eta_joins() != b.eta_joins()) {
      if (a.eta_joins() < b.eta_joins()) best = i;
      continue;
    }
    if (a.cuts() < b.cuts()) best = i;
  }
  return best;
}

}  // namespace basislex
