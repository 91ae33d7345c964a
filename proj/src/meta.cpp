#include "revbayes/meta.hpp"

#include <cmath>

#include "revbayes/ancred.hpp"
#include "revbayes/errors.hpp"

namespace revbayes::meta {

EffectEstimate MetaResult::pooled_estimate() const {
  return EffectEstimate(pooled.mean, pooled.sd());
}

PosteriorSummary forward_update(double prior_mean, double prior_precision,
                                const EffectEstimate& estimate, double level) {
  if (!(prior_precision >= 0.0) || !std::isfinite(prior_precision)) {
    throw InvalidArgument("prior precision must be nonnegative and finite");
  }
  const double kappa = estimate.precision();
  const double precision = prior_precision + kappa;
  // kappa / precision is exactly 1 under a flat prior, so theta_hat passes through.
  const double mean =
      prior_mean * prior_precision / precision + estimate.theta_hat() * kappa / precision;
  return {mean, precision, level};
}

PosteriorSummary reverse_update(const PosteriorSummary& posterior, const EffectEstimate& estimate) {
  const double kappa = estimate.precision();
  const double precision = posterior.precision - kappa;
  if (!(precision > 0.0)) {
    throw Undefined("posterior precision not greater than observational precision");
  }
  const double mean =
      (posterior.mean * posterior.precision - estimate.theta_hat() * kappa) / precision;
  return {mean, precision, posterior.level};
}

MetaResult pool(std::span<const Study> studies, double level) {
  if (studies.empty()) throw InvalidArgument("meta-analysis needs at least one study");

  PosteriorSummary posterior{0.0, 0.0, level};
  for (const Study& s : studies) {
    posterior = forward_update(posterior.mean, posterior.precision, s.estimate(), level);
  }

  MetaResult result{posterior, {}};
  result.per_study.reserve(studies.size());
  for (const Study& s : studies) {
    StudyDiagnostics d{s.id(), s.estimate(), std::nullopt, std::nullopt};
    if (studies.size() > 1) {
      try {
        d.leave_one_out_prior = reverse_update(posterior, s.estimate());
        d.box = box_check(s.estimate(), *d.leave_one_out_prior);
      } catch (const Undefined&) {
        // Left empty; reported per study by the caller.
      }
    }
    result.per_study.push_back(std::move(d));
  }
  return result;
}

BoxCheck box_check(const EffectEstimate& estimate, const PosteriorSummary& prior) {
  if (!(prior.precision > 0.0)) {
    throw InvalidArgument("prior-predictive check needs a prior with positive precision");
  }
  const double scale = std::sqrt(estimate.se() * estimate.se() + 1.0 / prior.precision);
  const double t = (estimate.theta_hat() - prior.mean) / scale;
  return {t, stat::chisq1_tail(t * t)};
}

FailSafeN failsafe_n(const MetaResult& meta, double level) {
  const double alpha = 1.0 - level;
  const double z = meta.pooled_estimate().z();
  const double zc = stat::z_critical(alpha);
  if (!(z * z > zc * zc)) return {0.0, 0, false};

  // Sceptical prior variance tau^2 = g sigma^2 with sigma^2 = 1/delta'.
  const double g = ancred::sceptical_relative_variance(z, alpha);
  const double tau2 = g / meta.pooled.precision;
  const double n = static_cast<double>(meta.size());
  const double n_exact = n / (meta.pooled.precision * tau2);
  return {n_exact, static_cast<long>(std::ceil(n_exact)), true};
}

}  // namespace revbayes::meta
