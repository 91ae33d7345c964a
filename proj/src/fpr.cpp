#include "revbayes/fpr.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "revbayes/errors.hpp"

namespace revbayes::fpr {
namespace {

constexpr double kE = 2.718281828459045;

void require_open_unit(double x, const char* what) {
  if (!(x > 0.0 && x < 1.0)) {
    throw InvalidArgument(std::string(what) + " must lie in (0, 1)");
  }
}

}  // namespace

std::string_view to_string(CalibrationKind kind) {
  switch (kind) {
    case CalibrationKind::local_z: return "local_z";
    case CalibrationKind::simple_z: return "simple_z";
    case CalibrationKind::e_p_log_p: return "e_p_log_p";
    case CalibrationKind::e_q_log_q: return "e_q_log_q";
    case CalibrationKind::els_all_priors: return "els_all_priors";
  }
  return "local_z";
}

std::optional<CalibrationKind> parse_calibration(std::string_view name) {
  for (CalibrationKind k : kAllCalibrations) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

Probability min_bf(double p, CalibrationKind kind) {
  require_open_unit(p, "p-value");
  switch (kind) {
    case CalibrationKind::e_p_log_p:
      return Probability(p < 1.0 / kE ? -kE * p * std::log(p) : 1.0);
    case CalibrationKind::e_q_log_q: {
      const double q = 1.0 - p;
      return Probability(p < 1.0 - 1.0 / kE ? -kE * q * std::log1p(-p) : 1.0);
    }
    default: break;
  }

  const double z = -stat::norm_quantile(0.5 * p);
  const double z2 = z * z;
  switch (kind) {
    case CalibrationKind::local_z:
      return Probability(z <= 1.0 ? 1.0 : z * std::exp(0.5 - 0.5 * z2));
    case CalibrationKind::simple_z:
      return Probability(std::min(1.0, 2.0 * std::exp(-0.5 * z2) / (1.0 + std::exp(-2.0 * z2))));
    case CalibrationKind::els_all_priors:
      return Probability(std::exp(-0.5 * z2));
    default: break;
  }
  throw InvalidArgument("unknown calibration");
}

Probability prior_prob_for_fpr(double p, double fpr, CalibrationKind kind) {
  require_open_unit(fpr, "false positive risk");
  const double bf = min_bf(p, kind);
  return Probability(1.0 / (1.0 + (1.0 - fpr) / fpr * bf));
}

Probability fpr_forward(double prior_h0, double bf01) {
  require_open_unit(prior_h0, "prior probability of H0");
  if (!(bf01 > 0.0) || !std::isfinite(bf01)) {
    throw InvalidArgument("Bayes factor must be positive and finite");
  }
  const double odds = bf01 * prior_h0 / (1.0 - prior_h0);
  return Probability(odds / (1.0 + odds));
}

Probability prior_bound_fpr_equals_p(double p, CalibrationKind kind) {
  return prior_prob_for_fpr(p, p, kind);
}

}  // namespace revbayes::fpr
