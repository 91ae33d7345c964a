#pragma once

// False positive risk: calibrations of a two-sided p-value to a minimum
// Bayes factor, and Reverse-Bayes bounds on the prior probability of H0.

#include <array>
#include <optional>
#include <string_view>

#include "revbayes/statfn.hpp"

namespace revbayes::fpr {

enum class CalibrationKind { local_z, simple_z, e_p_log_p, e_q_log_q, els_all_priors };

inline constexpr std::array<CalibrationKind, 5> kAllCalibrations = {
    CalibrationKind::local_z, CalibrationKind::simple_z, CalibrationKind::e_p_log_p,
    CalibrationKind::e_q_log_q, CalibrationKind::els_all_priors};

std::string_view to_string(CalibrationKind kind);
std::optional<CalibrationKind> parse_calibration(std::string_view name);

// Minimum BF01 for a two-sided p-value.
//   local_z         minimum over local normal priors
//   simple_z        two-point alternative +/- theta at the observed |z|,
//                   2 exp(-z^2/2) / (1 + exp(-2 z^2)); fitted to published
//                   curve values, not derived
//   e_p_log_p       -e p log p
//   e_q_log_q       -e q log q, q = 1 - p
//   els_all_priors  exp(-z^2/2), the bound over all priors
Probability min_bf(double p, CalibrationKind kind);

// Upper bound on Pr(H0) for which the false positive risk stays at `fpr`.
Probability prior_prob_for_fpr(double p, double fpr, CalibrationKind kind);

// FPR from a prior probability of H0 and a Bayes factor BF01.
Probability fpr_forward(double prior_h0, double bf01);

// Upper bound on Pr(H0) for which FPR = p.
Probability prior_bound_fpr_equals_p(double p, CalibrationKind kind);

}  // namespace revbayes::fpr
