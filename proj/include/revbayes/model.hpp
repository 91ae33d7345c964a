#pragma once

// Value types shared across the analysis modules. Effects are log odds
// ratios throughout; the odds-ratio scale only appears at I/O boundaries.

#include <optional>
#include <string>

#include "revbayes/statfn.hpp"

namespace revbayes {

inline constexpr double kDefaultLevel = 0.95;

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

// Interval mapped to the odds-ratio scale.
Interval exp_interval(const Interval& log_scale);

// Normally distributed effect estimate theta_hat with standard error se.
class EffectEstimate {
 public:
  EffectEstimate(double theta_hat, double se);

  // Recovers the estimate from a symmetric confidence interval at `level`.
  static EffectEstimate from_ci(double lower, double upper, double level = kDefaultLevel);

  double theta_hat() const { return theta_hat_; }
  double se() const { return se_; }
  double precision() const { return 1.0 / (se_ * se_); }
  double z() const { return theta_hat_ / se_; }
  Probability p_value() const;
  Interval ci(double level = kDefaultLevel) const;

 private:
  double theta_hat_;
  double se_;
};

// Raw 2x2 outcome counts of a two-arm trial.
struct TrialCounts {
  long events_treatment = 0;
  long n_treatment = 0;
  long events_control = 0;
  long n_control = 0;
};

// One trial in a meta-analysis: either raw counts or a summary estimate.
class Study {
 public:
  static Study from_counts(std::string id, const TrialCounts& counts);
  static Study from_estimate(std::string id, double theta_hat, double se);

  const std::string& id() const { return id_; }
  const std::optional<TrialCounts>& counts() const { return counts_; }
  const EffectEstimate& estimate() const { return estimate_; }

 private:
  Study(std::string id, std::optional<TrialCounts> counts, EffectEstimate estimate);

  std::string id_;
  std::optional<TrialCounts> counts_;
  EffectEstimate estimate_;
};

enum class PriorRole { sceptical, advocacy, optimistic, flat, generic };

const char* to_string(PriorRole role);

// Normal prior N(mean, variance) on the log odds ratio. A flat prior has
// zero precision and no meaningful variance.
class NormalPrior {
 public:
  NormalPrior(double mean, double variance, PriorRole role = PriorRole::generic);

  static NormalPrior flat();
  static NormalPrior sceptical(double variance);
  static NormalPrior optimistic(const EffectEstimate& estimate);

  double mean() const { return mean_; }
  double variance() const { return variance_; }
  double sd() const;
  double precision() const;
  PriorRole role() const { return role_; }

  Interval interval(double level = kDefaultLevel) const;

 private:
  double mean_;
  double variance_;
  PriorRole role_;
};

// Posterior N(mean, 1/precision) with the level used for its credible interval.
struct PosteriorSummary {
  double mean = 0.0;
  double precision = 0.0;
  double level = kDefaultLevel;

  double sd() const;
  Interval ci() const;
};

// Log odds ratio and its Woolf standard error. Rejects zero cells.
EffectEstimate estimate_from_counts(const TrialCounts& counts);

// Odds-form Bayes: posterior odds = likelihood ratio * prior odds, and back.
double forward_posterior_odds(double prior_odds, double likelihood_ratio);
double reverse_prior_odds(double posterior_odds, double likelihood_ratio);

Interval ci_limits(const EffectEstimate& estimate, double level = kDefaultLevel);

}  // namespace revbayes
