#include "revbayes/ancred.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "revbayes/errors.hpp"

namespace revbayes::ancred {
namespace {

bool is_significant(double z, double alpha) {
  const double zc = stat::z_critical(alpha);
  return z * z > zc * zc;
}

void require_rate(double rate) {
  if (!(rate > 0.0 && rate < 1.0)) {
    throw InvalidArgument("event rate must lie in (0, 1)");
  }
}

// Control-arm non-events for equal event counts e per arm, given the
// log odds ratio mean and variance. Requires e > 2 / var.
double control_nonevents(double e, double mean, double var) {
  return (1.0 + std::exp(mean)) / (var - 2.0 / e);
}

// Signed distance from the credibility boundary as a function of |z|.
double credibility_margin(double z, double alpha, Flavor flavor) {
  const double zc = stat::z_critical(alpha);
  const double g = 1.0 / (z * z / (zc * zc) - 1.0);
  if (flavor == Flavor::prior_based) return z * z - zc * zc * g;
  return z * z / (1.0 + g) - zc * zc;
}

double boundary_z(double alpha, Flavor flavor) {
  const double zc = stat::z_critical(alpha);
  return stat::find_root([&](double z) { return credibility_margin(z, alpha, flavor); },
                         zc * (1.0 + 1e-9), 20.0 * zc);
}

}  // namespace

const char* to_string(CredibilityReason reason) {
  switch (reason) {
    case CredibilityReason::credible: return "credible";
    case CredibilityReason::not_credible: return "not_credible";
    case CredibilityReason::not_significant: return "not_significant";
  }
  return "not_significant";
}

double sceptical_relative_variance(double z, double alpha) {
  const double zc = stat::z_critical(alpha);
  if (!(z * z > zc * zc)) {
    throw Undefined("sufficiently sceptical prior undefined: estimate not significant at level " +
                    std::to_string(alpha));
  }
  return 1.0 / (z * z / (zc * zc) - 1.0);
}

double scepticism_limit(double lower, double upper) {
  if (!(lower * upper > 0.0)) {
    throw InvalidArgument("scepticism limit needs a significant interval (L U > 0)");
  }
  const double width = upper - lower;
  return width * width / (4.0 * std::sqrt(upper * lower));
}

ScepticalAnalysis sceptical_analysis(const EffectEstimate& estimate, double alpha) {
  const double g = sceptical_relative_variance(estimate.z(), alpha);
  const double se = estimate.se();
  const double S = stat::z_critical(alpha) * se * std::sqrt(g);
  return {g, g * se * se, S, {std::exp(-S), std::exp(S)}};
}

double advocacy_limit(double lower, double upper) {
  if (!(lower * upper < 0.0)) {
    throw InvalidArgument("advocacy limit needs a non-significant interval (L U < 0)");
  }
  if (lower + upper == 0.0) {
    throw Undefined("advocacy limit undefined for an interval centred at zero");
  }
  const double width = upper - lower;
  return -(upper + lower) / (2.0 * upper * lower) * width * width;
}

double advocacy_relative_mean(double z, double alpha) {
  const double zc = stat::z_critical(alpha);
  if (!(z * z < zc * zc)) {
    throw Undefined("advocacy prior undefined: estimate significant at level " +
                    std::to_string(alpha));
  }
  return 2.0 / (1.0 - z * z / (zc * zc));
}

AdvocacyAnalysis advocacy_prior(const EffectEstimate& estimate, double alpha) {
  const double m = advocacy_relative_mean(estimate.z(), alpha);
  if (estimate.theta_hat() == 0.0) {
    throw Undefined("advocacy prior undefined for a zero point estimate (no direction)");
  }
  const double zc = stat::z_critical(alpha);
  const double mu = m * estimate.theta_hat();
  const double tau = std::fabs(mu) / zc;
  return {m, mu, tau, 2.0 * mu, 1.0 / zc};
}

CredibilityVerdict intrinsic_credibility(const EffectEstimate& estimate, double alpha,
                                         Flavor flavor) {
  const double z = estimate.z();
  if (!is_significant(z, alpha)) return {false, CredibilityReason::not_significant};

  bool credible = false;
  if (flavor == Flavor::prior_based) {
    const double S = sceptical_analysis(estimate, alpha).S;
    credible = estimate.theta_hat() * estimate.theta_hat() > S * S;
  } else {
    const double g = sceptical_relative_variance(z, alpha);
    credible = stat::chisq1_tail(z * z / (1.0 + g)) < alpha;
  }
  return {credible, credible ? CredibilityReason::credible : CredibilityReason::not_credible};
}

double intrinsic_credibility_threshold(double alpha, Flavor flavor) {
  return stat::two_sided_p(boundary_z(alpha, flavor));
}

double credibility_ratio(double lower, double upper) {
  if (!(lower * upper > 0.0)) {
    throw InvalidArgument("credibility ratio needs a significant interval (L U > 0)");
  }
  return std::max(std::fabs(upper / lower), std::fabs(lower / upper));
}

double credibility_ratio_threshold(double alpha) {
  const double zb = boundary_z(alpha, Flavor::predictive_based);
  const double zc = stat::z_critical(alpha);
  return (zb + zc) / (zb - zc);
}

Probability p_intrinsic(double z) { return stat::two_sided_p(z / std::sqrt(2.0)); }

Probability p_replication(double z) { return Probability(1.0 - 0.5 * p_intrinsic(z)); }

EquivalentTrial equivalent_trial(const NormalPrior& prior, std::optional<double> event_rate) {
  if (!(prior.variance() > 0.0)) {
    throw InvalidArgument("equivalent trial needs a prior with positive variance");
  }
  const double var = prior.variance();
  const double mean = prior.mean();

  EquivalentTrial trial;
  trial.events_per_arm = 2.0 / var;
  trial.allocation_ratio = std::exp(mean);
  if (!event_rate) return trial;

  const double r = *event_rate;
  require_rate(r);
  if (mean == 0.0) {
    const double n = 2.0 / (var * r * (1.0 - r));
    trial.patients_per_arm = n;
    trial.events_per_arm = r * n;
    return trial;
  }

  // Equal whole event counts e in both arms; the non-event counts then follow
  // from the mean and variance. The control rate e / (e + f_c) increases with
  // e, so the best whole e is a neighbour of the real-valued solution.
  const double e_real = (1.0 + std::exp(mean) + 2.0 * (1.0 - r) / r) * r / (var * (1.0 - r));
  const double e_min = 2.0 / var;
  double best_e = 0.0;
  double best_gap = INFINITY;
  for (double e : {std::floor(e_real), std::ceil(e_real)}) {
    if (e < 1.0 || e <= e_min) continue;
    const double f_c = control_nonevents(e, mean, var);
    const double gap = std::fabs(e / (e + f_c) - r);
    if (gap < best_gap) {
      best_gap = gap;
      best_e = e;
    }
  }
  if (!(best_e > 0.0)) {
    throw Undefined("no whole event count reproduces the prior at event rate " +
                    std::to_string(r));
  }
  const double f_c = control_nonevents(best_e, mean, var);
  const double f_t = f_c * std::exp(-mean);
  trial.events_per_arm = best_e;
  trial.treatment = ArmCounts{best_e, best_e + f_t};
  trial.control = ArmCounts{best_e, best_e + f_c};
  return trial;
}

WholeTrial whole_counts(const EquivalentTrial& trial, std::optional<double> event_rate) {
  WholeTrial whole;
  if (trial.treatment && trial.control) {
    const long e = std::lround(trial.events_per_arm);
    whole.events_per_arm = e;
    whole.treatment = WholeArm{e, static_cast<long>(std::ceil(trial.treatment->patients))};
    whole.control = WholeArm{e, static_cast<long>(std::ceil(trial.control->patients))};
    return whole;
  }
  if (trial.patients_per_arm && event_rate) {
    const long n = static_cast<long>(std::ceil(*trial.patients_per_arm));
    const long e = std::lround(*event_rate * static_cast<double>(n));
    whole.events_per_arm = e;
    whole.treatment = WholeArm{e, n};
    whole.control = WholeArm{e, n};
    return whole;
  }
  whole.events_per_arm = static_cast<long>(std::ceil(trial.events_per_arm));
  return whole;
}

}  // namespace revbayes::ancred
