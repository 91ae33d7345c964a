#pragma once

// Analysis of Credibility: priors that make a finding just non-credible
// (sceptical, for significant results) or just credible (advocacy, for
// non-significant results), intrinsic credibility, and translation of a
// normal prior into an equivalent hypothetical two-arm trial.

#include <optional>

#include "revbayes/model.hpp"

namespace revbayes::ancred {

struct ScepticalAnalysis {
  double g = 0.0;     // relative prior variance tau^2 / sigma^2
  double tau2 = 0.0;  // prior variance on the log odds ratio scale
  double S = 0.0;     // scepticism limit
  Interval critical_interval_or;  // (exp(-S), exp(S))

  NormalPrior prior() const { return NormalPrior::sceptical(tau2); }
};

struct AdvocacyAnalysis {
  double m = 0.0;   // relative prior mean mu / theta_hat
  double mu = 0.0;
  double tau = 0.0;
  double AL = 0.0;  // advocacy limit, the far prior quantile; AL = 2 mu
  double cv = 0.0;  // tau / |mu| = 1 / z_{alpha/2}

  NormalPrior prior() const { return NormalPrior(mu, tau * tau, PriorRole::advocacy); }
};

enum class Flavor { prior_based, predictive_based };

enum class CredibilityReason { credible, not_credible, not_significant };

struct CredibilityVerdict {
  bool credible = false;
  CredibilityReason reason = CredibilityReason::not_significant;
};

const char* to_string(CredibilityReason reason);

struct ArmCounts {
  double events = 0.0;
  double patients = 0.0;
};

// Hypothetical trial carrying the same information as a normal prior.
// Counts are real numbers; see whole_counts() for the integer version.
struct EquivalentTrial {
  double events_per_arm = 0.0;
  // Equal arm sizes; set when an event rate was supplied for a mean-zero prior.
  std::optional<double> patients_per_arm;
  // R in a 1:R treatment:control allocation, exp(mu).
  double allocation_ratio = 1.0;
  // Set when an event rate was supplied for a prior with nonzero mean.
  std::optional<ArmCounts> treatment;
  std::optional<ArmCounts> control;
};

struct WholeArm {
  long events = 0;
  long patients = 0;
};

struct WholeTrial {
  long events_per_arm = 0;
  std::optional<WholeArm> treatment;
  std::optional<WholeArm> control;
};

// g = 1 / (z^2 / z_{alpha/2}^2 - 1); Undefined unless significant at alpha.
double sceptical_relative_variance(double z, double alpha);

// S = (U - L)^2 / (4 sqrt(U L)) from a significant confidence interval.
double scepticism_limit(double lower, double upper);

ScepticalAnalysis sceptical_analysis(const EffectEstimate& estimate, double alpha = 0.05);

// AL = -(U + L) / (2 U L) * (U - L)^2 from a non-significant interval.
double advocacy_limit(double lower, double upper);

// m = 2 / (1 - z^2 / z_{alpha/2}^2); Undefined unless non-significant.
double advocacy_relative_mean(double z, double alpha);

AdvocacyAnalysis advocacy_prior(const EffectEstimate& estimate, double alpha = 0.05);

CredibilityVerdict intrinsic_credibility(const EffectEstimate& estimate, double alpha, Flavor flavor);

// Two-sided p-value at which a finding becomes intrinsically credible.
double intrinsic_credibility_threshold(double alpha, Flavor flavor);

// max(|U/L|, |L/U|) of a significant interval on the log odds ratio scale.
double credibility_ratio(double lower, double upper);

// Credibility ratio at the predictive-flavour boundary. The same for all alpha.
double credibility_ratio_threshold(double alpha = 0.05);

// p-value for intrinsic credibility, 2 (1 - Phi(|z| / sqrt 2)).
Probability p_intrinsic(double z);

// Probability that a replication shares the sign of the estimate.
Probability p_replication(double z);

EquivalentTrial equivalent_trial(const NormalPrior& prior,
                                 std::optional<double> event_rate = std::nullopt);

// Integer counts for display. Arm sizes and rate-free event counts are
// rounded up, so the whole trial is at least as informative as the prior;
// events at a given rate are rounded from the rounded-up arm size.
WholeTrial whole_counts(const EquivalentTrial& trial, std::optional<double> event_rate);

}  // namespace revbayes::ancred
