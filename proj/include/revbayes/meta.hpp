#pragma once

// Fixed-effect meta-analysis as iterated normal updating, leave-one-out
// priors by reverse updating, prior-predictive conflict checks and the
// fail-safe N.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "revbayes/model.hpp"

namespace revbayes::meta {

struct BoxCheck {
  double t_box = 0.0;
  Probability p_box;
};

struct StudyDiagnostics {
  std::string id;
  EffectEstimate estimate;
  // Absent for a single study, or when the remaining precision is not positive.
  std::optional<PosteriorSummary> leave_one_out_prior;
  std::optional<BoxCheck> box;
};

struct MetaResult {
  PosteriorSummary pooled;
  std::vector<StudyDiagnostics> per_study;

  std::size_t size() const { return per_study.size(); }
  // Pooled estimate read as an effect estimate with se = 1/sqrt(precision).
  EffectEstimate pooled_estimate() const;
};

struct FailSafeN {
  double n_exact = 0.0;
  long n_integer = 0;
  // False when the pooled estimate is not significant and N is reported as 0.
  bool significant = false;
};

// delta' = delta + kappa, mu' = (mu delta + x kappa) / delta'. A prior
// precision of zero encodes the flat initial prior.
PosteriorSummary forward_update(double prior_mean, double prior_precision,
                                const EffectEstimate& estimate,
                                double level = kDefaultLevel);

// Inverse of forward_update: the prior that, combined with `estimate`,
// yields `posterior`. Throws Undefined unless posterior precision exceeds
// the observational precision.
PosteriorSummary reverse_update(const PosteriorSummary& posterior, const EffectEstimate& estimate);

MetaResult pool(std::span<const Study> studies, double level = kDefaultLevel);

// Box prior-predictive check of `estimate` against a normal prior.
BoxCheck box_check(const EffectEstimate& estimate, const PosteriorSummary& prior);

FailSafeN failsafe_n(const MetaResult& meta, double level = kDefaultLevel);

}  // namespace revbayes::meta
