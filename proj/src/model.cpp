#include "revbayes/model.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "revbayes/errors.hpp"

namespace revbayes {
namespace {

void require_level(double level) {
  if (!(level > 0.0 && level < 1.0)) {
    throw InvalidArgument("level must lie in (0, 1)");
  }
}

void require_positive_finite(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw InvalidArgument(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

Interval exp_interval(const Interval& log_scale) {
  return {std::exp(log_scale.lower), std::exp(log_scale.upper)};
}

EffectEstimate::EffectEstimate(double theta_hat, double se) : theta_hat_(theta_hat), se_(se) {
  if (!std::isfinite(theta_hat)) throw InvalidArgument("effect estimate must be finite");
  require_positive_finite(se, "standard error");
}

EffectEstimate EffectEstimate::from_ci(double lower, double upper, double level) {
  require_level(level);
  if (!std::isfinite(lower) || !std::isfinite(upper) || !(lower < upper)) {
    throw InvalidArgument("confidence interval needs finite limits with lower < upper");
  }
  const double zc = stat::z_critical(1.0 - level);
  return EffectEstimate(0.5 * (lower + upper), (upper - lower) / (2.0 * zc));
}

Probability EffectEstimate::p_value() const { return stat::two_sided_p(z()); }

Interval EffectEstimate::ci(double level) const { return ci_limits(*this, level); }

Study::Study(std::string id, std::optional<TrialCounts> counts, EffectEstimate estimate)
    : id_(std::move(id)), counts_(counts), estimate_(estimate) {}

Study Study::from_counts(std::string id, const TrialCounts& counts) {
  try {
    return Study(std::move(id), counts, estimate_from_counts(counts));
  } catch (const InvalidArgument& e) {
    throw InvalidArgument("study '" + id + "': " + e.what());
  }
}

Study Study::from_estimate(std::string id, double theta_hat, double se) {
  try {
    return Study(std::move(id), std::nullopt, EffectEstimate(theta_hat, se));
  } catch (const InvalidArgument& e) {
    throw InvalidArgument("study '" + id + "': " + e.what());
  }
}

const char* to_string(PriorRole role) {
  switch (role) {
    case PriorRole::sceptical: return "sceptical";
    case PriorRole::advocacy: return "advocacy";
    case PriorRole::optimistic: return "optimistic";
    case PriorRole::flat: return "flat";
    case PriorRole::generic: return "generic";
  }
  return "generic";
}

NormalPrior::NormalPrior(double mean, double variance, PriorRole role)
    : mean_(mean), variance_(variance), role_(role) {
  if (!std::isfinite(mean)) throw InvalidArgument("prior mean must be finite");
  if (role == PriorRole::flat) {
    variance_ = 0.0;
    return;
  }
  require_positive_finite(variance, "prior variance");
  if (role == PriorRole::sceptical && mean != 0.0) {
    throw InvalidArgument("a sceptical prior is centred at zero");
  }
}

NormalPrior NormalPrior::flat() { return NormalPrior(0.0, 0.0, PriorRole::flat); }

NormalPrior NormalPrior::sceptical(double variance) {
  return NormalPrior(0.0, variance, PriorRole::sceptical);
}

NormalPrior NormalPrior::optimistic(const EffectEstimate& estimate) {
  return NormalPrior(estimate.theta_hat(), estimate.se() * estimate.se(), PriorRole::optimistic);
}

double NormalPrior::sd() const { return std::sqrt(variance_); }

double NormalPrior::precision() const {
  return role_ == PriorRole::flat ? 0.0 : 1.0 / variance_;
}

Interval NormalPrior::interval(double level) const {
  require_level(level);
  if (role_ == PriorRole::flat) throw Undefined("a flat prior has no credible interval");
  const double half = stat::z_critical(1.0 - level) * sd();
  return {mean_ - half, mean_ + half};
}

double PosteriorSummary::sd() const { return 1.0 / std::sqrt(precision); }

Interval PosteriorSummary::ci() const {
  require_level(level);
  if (!(precision > 0.0)) throw Undefined("posterior precision must be positive");
  const double half = stat::z_critical(1.0 - level) * sd();
  return {mean - half, mean + half};
}

EffectEstimate estimate_from_counts(const TrialCounts& c) {
  if (c.n_treatment <= 0 || c.n_control <= 0) {
    throw InvalidArgument("arm sizes must be positive");
  }
  if (c.events_treatment < 0 || c.events_control < 0 || c.events_treatment > c.n_treatment ||
      c.events_control > c.n_control) {
    throw InvalidArgument("event counts must lie between 0 and the arm size");
  }
  const double a = static_cast<double>(c.events_treatment);
  const double b = static_cast<double>(c.n_treatment - c.events_treatment);
  const double cc = static_cast<double>(c.events_control);
  const double d = static_cast<double>(c.n_control - c.events_control);
  if (a == 0.0 || b == 0.0 || cc == 0.0 || d == 0.0) {
    throw InvalidArgument(
        "zero cell in the 2x2 table; supply a log odds ratio estimate and standard error "
        "directly");
  }
  const double theta = std::log(a) - std::log(b) - std::log(cc) + std::log(d);
  const double se = std::sqrt(1.0 / a + 1.0 / b + 1.0 / cc + 1.0 / d);
  return EffectEstimate(theta, se);
}

double forward_posterior_odds(double prior_odds, double likelihood_ratio) {
  require_positive_finite(prior_odds, "prior odds");
  require_positive_finite(likelihood_ratio, "likelihood ratio");
  return likelihood_ratio * prior_odds;
}

double reverse_prior_odds(double posterior_odds, double likelihood_ratio) {
  require_positive_finite(posterior_odds, "posterior odds");
  require_positive_finite(likelihood_ratio, "likelihood ratio");
  return posterior_odds / likelihood_ratio;
}

Interval ci_limits(const EffectEstimate& estimate, double level) {
  require_level(level);
  const double half = stat::z_critical(1.0 - level) * estimate.se();
  return {estimate.theta_hat() - half, estimate.theta_hat() + half};
}

}  // namespace revbayes
