#pragma once

// Reverse-Bayes with Bayes factors. All Bayes factors are BF01, the
// evidence for H0: theta = 0 relative to the alternative.

#include <optional>

#include "revbayes/model.hpp"

namespace revbayes::bf {

// The two relative prior variances g at which BF01 under N(0, g sigma^2)
// equals the cut-off gamma. g_small is the sceptical solution and the
// recommended one; g_large represents ignorance rather than scepticism.
struct BfScepticalSolution {
  double g_small = 0.0;
  double g_large = 0.0;
  double gamma = 0.0;
  // Credible interval of the g_small prior on the odds-ratio scale; filled
  // by sceptical_prior_for_gamma.
  std::optional<Interval> prior_interval_or;
};

// Two advocacy priors N(m theta_hat, tau^2) with tau = cv |mu| at which
// BF01 equals gamma, ordered by |m|. The small-|m| root is recommended.
struct BfAdvocacySolution {
  double m_small = 0.0;
  double mu_small = 0.0;
  double tau_small = 0.0;
  double m_large = 0.0;
  double mu_large = 0.0;
  double tau_large = 0.0;
  double gamma = 0.0;
  double cv = 0.0;  // 1 / z(gamma)
  // Prior interval mu +/- z(gamma) tau of the recommended root, OR scale.
  Interval prior_interval_or;
};

// BF01 = sqrt(1 + g) exp(-(g / (1 + g)) z^2 / 2).
double bf01_sceptical(double z, double g);

// Minimum of bf01_sceptical over g, attained at g = max(z^2 - 1, 0).
double min_bf_local(double z);

// Minimum over all priors: exp(-z^2 / 2).
double min_bf_els(double z);

// Throws Undefined when min_bf_local(z) > gamma.
BfScepticalSolution sceptical_g_for_gamma(double z, double gamma);
BfScepticalSolution sceptical_prior_for_gamma(const EffectEstimate& estimate, double gamma,
                                              double level = kDefaultLevel);

// BF01 for H1: theta ~ N(mu, tau^2).
double bf01_normal_prior(const EffectEstimate& estimate, const NormalPrior& prior);

// z(gamma) = sqrt(-2 log gamma).
double z_gamma(double gamma);

// Throws Undefined when no prior in the fixed-CV family reaches gamma.
BfAdvocacySolution advocacy_for_gamma(const EffectEstimate& estimate, double gamma);

// Minimum BF01 over the fixed-CV advocacy family, and the m attaining it.
struct AdvocacyFamilyMinimum {
  double m = 0.0;
  double bf01 = 1.0;
};
AdvocacyFamilyMinimum advocacy_family_minimum(const EffectEstimate& estimate, double gamma);

// BF12 of the sceptical prior N(0, g sigma^2) against the optimistic prior
// N(theta_hat, sigma^2): sqrt(2 / (1 + g)) exp(-z^2 / (2 (1 + g))).
double bf12_sceptical_vs_optimistic(double z, double g);

// Smallest gamma at which the finding is intrinsically credible.
double bf_intrinsic(double z);

}  // namespace revbayes::bf
