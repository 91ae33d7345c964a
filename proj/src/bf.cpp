#include "revbayes/bf.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <string>

#include "revbayes/errors.hpp"

namespace revbayes::bf {
namespace {

void require_cutoff(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw InvalidArgument("Bayes factor cut-off gamma must lie in (0, 1)");
  }
}

void require_positive_g(double g) {
  if (!(g > 0.0) || !std::isfinite(g)) {
    throw InvalidArgument("relative prior variance g must be positive and finite");
  }
}

std::string as_reciprocal(double bf) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "1/%.1f", 1.0 / bf);
  return buf;
}

double log_bf01_sceptical(double z, double g) {
  return 0.5 * std::log1p(g) - g / (1.0 + g) * 0.5 * z * z;
}

// W-1 of -exp(log_neg_x) for arguments too small to represent: solves
// w + log(-w) = log_neg_x by Newton's method.
double lambert_wm1_from_log(double log_neg_x) {
  double w = log_neg_x - std::log(-log_neg_x);
  for (int i = 0; i < 50; ++i) {
    const double step = (w + std::log(-w) - log_neg_x) / (1.0 + 1.0 / w);
    w -= step;
    if (std::fabs(step) <= 1e-15 * std::fabs(w)) break;
  }
  return w;
}

// log BF01 along the advocacy family mu = m theta_hat, tau = |mu| / z(gamma).
double log_bf01_advocacy(double z, double zg, double m) {
  const double v = m * m * z * z / (zg * zg);  // tau^2 / sigma^2
  const double d = z * (1.0 - m);              // (theta_hat - mu) / sigma
  return 0.5 * std::log1p(v) - 0.5 * (z * z - d * d / (1.0 + v));
}

}  // namespace

double bf01_sceptical(double z, double g) {
  require_positive_g(g);
  return std::exp(log_bf01_sceptical(z, g));
}

double min_bf_local(double z) {
  if (!std::isfinite(z)) throw InvalidArgument("z must be finite");
  const double az = std::fabs(z);
  if (az <= 1.0) return 1.0;
  return az * std::exp(-0.5 * z * z + 0.5);
}

double min_bf_els(double z) {
  if (!std::isfinite(z)) throw InvalidArgument("z must be finite");
  return std::exp(-0.5 * z * z);
}

BfScepticalSolution sceptical_g_for_gamma(double z, double gamma) {
  require_cutoff(gamma);
  const double min_bf = min_bf_local(z);
  if (min_bf > gamma) {
    throw Undefined("sufficiently sceptical prior does not exist at gamma = " +
                    as_reciprocal(gamma) + ": attainable minimum BF01 is " +
                    as_reciprocal(min_bf) + " (all priors: " + as_reciprocal(min_bf_els(z)) +
                    ")");
  }

  // q = W(x), x = -(z^2 / gamma^2) exp(-z^2), evaluated through its log.
  const double z2 = z * z;
  const double log_neg_x = 2.0 * std::log(std::fabs(z)) - 2.0 * std::log(gamma) - z2;
  const double x = std::max(-std::exp(log_neg_x), -stat::kInvE);

  double q_secondary;
  double q_principal;
  if (x < -std::numeric_limits<double>::min()) {
    q_secondary = stat::lambert_w(x, stat::Branch::secondary);
    q_principal = stat::lambert_w(x, stat::Branch::principal);
  } else {
    q_secondary = lambert_wm1_from_log(log_neg_x);
    q_principal = 0.0;
  }

  BfScepticalSolution sol;
  sol.gamma = gamma;
  sol.g_small = -z2 / q_secondary - 1.0;
  sol.g_large = q_principal == 0.0 ? std::numeric_limits<double>::infinity()
                                   : -z2 / q_principal - 1.0;
  return sol;
}

BfScepticalSolution sceptical_prior_for_gamma(const EffectEstimate& estimate, double gamma,
                                              double level) {
  BfScepticalSolution sol = sceptical_g_for_gamma(estimate.z(), gamma);
  const NormalPrior prior = NormalPrior::sceptical(sol.g_small * estimate.se() * estimate.se());
  sol.prior_interval_or = exp_interval(prior.interval(level));
  return sol;
}

double bf01_normal_prior(const EffectEstimate& estimate, const NormalPrior& prior) {
  if (!(prior.variance() > 0.0)) {
    throw InvalidArgument("Bayes factor needs a proper prior with positive variance");
  }
  const double s2 = estimate.se() * estimate.se();
  const double t2 = prior.variance();
  const double th = estimate.theta_hat();
  const double d = th - prior.mean();
  return std::exp(0.5 * std::log1p(t2 / s2) - 0.5 * (th * th / s2 - d * d / (s2 + t2)));
}

double z_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw InvalidArgument("gamma must lie in (0, 1]");
  }
  return std::sqrt(-2.0 * std::log(gamma));
}

AdvocacyFamilyMinimum advocacy_family_minimum(const EffectEstimate& estimate, double gamma) {
  require_cutoff(gamma);
  if (estimate.theta_hat() == 0.0) {
    throw Undefined("advocacy prior undefined for a zero point estimate (no direction)");
  }
  const double z = estimate.z();
  const double zg = z_gamma(gamma);
  auto f = [&](double m) { return log_bf01_advocacy(z, zg, m); };

  // Coarse log-spaced scan, then Brent refinement between the neighbours.
  constexpr int kGrid = 400;
  const double log_lo = std::log(1e-4);
  const double log_hi = std::log(1e4);
  auto grid_m = [&](int i) { return std::exp(log_lo + (log_hi - log_lo) * i / kGrid); };
  int best = 0;
  double best_val = f(grid_m(0));
  for (int i = 1; i <= kGrid; ++i) {
    const double v = f(grid_m(i));
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double lo = best == 0 ? 0.0 : grid_m(best - 1);
  const double hi = grid_m(std::min(best + 1, kGrid));
  std::uintmax_t iters = 200;
  const auto [m, val] = boost::math::tools::brent_find_minima(f, lo, hi, 52, iters);
  return val < best_val ? AdvocacyFamilyMinimum{m, std::exp(val)}
                        : AdvocacyFamilyMinimum{grid_m(best), std::exp(best_val)};
}

BfAdvocacySolution advocacy_for_gamma(const EffectEstimate& estimate, double gamma) {
  const AdvocacyFamilyMinimum minimum = advocacy_family_minimum(estimate, gamma);
  if (minimum.bf01 > gamma) {
    throw Undefined("advocacy prior does not exist at gamma = " + as_reciprocal(gamma) +
                    ": minimum BF01 over the fixed-CV family is " +
                    as_reciprocal(minimum.bf01));
  }
  const double z = estimate.z();
  const double zg = z_gamma(gamma);
  const double log_gamma = std::log(gamma);
  auto f = [&](double m) { return log_bf01_advocacy(z, zg, m) - log_gamma; };

  double hi = std::max(2.0 * minimum.m, 1.0);
  for (int i = 0; i < 200 && f(hi) <= 0.0; ++i) hi *= 2.0;

  const double m_small = stat::find_root(f, 0.0, minimum.m);
  const double m_large = stat::find_root(f, minimum.m, hi);

  BfAdvocacySolution sol;
  sol.gamma = gamma;
  sol.cv = 1.0 / zg;
  sol.m_small = m_small;
  sol.mu_small = m_small * estimate.theta_hat();
  sol.tau_small = std::fabs(sol.mu_small) / zg;
  sol.m_large = m_large;
  sol.mu_large = m_large * estimate.theta_hat();
  sol.tau_large = std::fabs(sol.mu_large) / zg;
  sol.prior_interval_or = {std::exp(sol.mu_small - zg * sol.tau_small),
                           std::exp(sol.mu_small + zg * sol.tau_small)};
  return sol;
}

double bf12_sceptical_vs_optimistic(double z, double g) {
  require_positive_g(g);
  return std::sqrt(2.0 / (1.0 + g)) * std::exp(-z * z / (2.0 * (1.0 + g)));
}

double bf_intrinsic(double z) {
  const double min_bf = min_bf_local(z);
  if (!(min_bf < 1.0)) {
    throw Undefined("no sceptical prior exists for |z| <= 1, so intrinsic credibility is "
                    "undefined");
  }
  // Search over u = log gamma so tiny cut-offs keep their relative accuracy.
  auto h = [&](double u) {
    const double gamma = std::exp(u);
    const double g = sceptical_g_for_gamma(z, gamma).g_small;
    return std::log(bf12_sceptical_vs_optimistic(z, g)) - u;
  };
  const double lo = std::log(min_bf) + 1e-9;
  const double hi = -1e-9;
  const double h_lo = h(lo);
  // Already credible at the smallest admissible cut-off.
  if (h_lo <= 0.0) return min_bf;
  if (h(hi) > 0.0) {
    throw Undefined("the finding is not intrinsically credible at any cut-off below 1");
  }
  return std::exp(stat::find_root(h, lo, hi));
}

}  // namespace revbayes::bf
