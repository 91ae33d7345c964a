#include <catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "revbayes/bf.hpp"
#include "revbayes/errors.hpp"
#include "revbayes/fpr.hpp"

using namespace revbayes;
using Catch::Approx;
using fpr::CalibrationKind;

TEST_CASE("calibrations on a grid", "[fpr]") {
  const double e = std::exp(1.0);
  for (double p = 1e-6; p < 0.36; p *= 1.1) {
    const double z = -stat::norm_quantile(p / 2);
    CHECK(fpr::min_bf(p, CalibrationKind::e_p_log_p) == Approx(-e * p * std::log(p)));
    const long double q = 1.0L - p;
    CHECK(fpr::min_bf(p, CalibrationKind::e_q_log_q) ==
          Approx(static_cast<double>(-e * q * std::log(q))).epsilon(1e-10));
    CHECK(fpr::min_bf(p, CalibrationKind::local_z) == Approx(bf::min_bf_local(z)).epsilon(1e-12));
    CHECK(fpr::min_bf(p, CalibrationKind::els_all_priors) ==
          Approx(bf::min_bf_els(z)).epsilon(1e-12));
  }
  CHECK(fpr::min_bf(0.5, CalibrationKind::e_p_log_p) == 1.0);
  CHECK(fpr::min_bf(0.7, CalibrationKind::e_q_log_q) == 1.0);
  CHECK_THROWS_AS(fpr::min_bf(0.0, CalibrationKind::local_z), InvalidArgument);
  CHECK_THROWS_AS(fpr::prior_prob_for_fpr(0.05, 1.0, CalibrationKind::local_z), InvalidArgument);
}

TEST_CASE("simple alternatives: two-point prior at +/- z", "[fpr]") {
  auto bf_two_point = [](double z, double t) {
    const double alt =
        0.5 * (std::exp(-0.5 * (z - t) * (z - t)) + std::exp(-0.5 * (z + t) * (z + t)));
    return std::exp(-0.5 * z * z) / alt;
  };
  for (double p : {0.2, 0.05, 0.01, 0.005, 0.001}) {
    const double z = -stat::norm_quantile(p / 2);
    CHECK(fpr::min_bf(p, CalibrationKind::simple_z) == Approx(bf_two_point(z, z)).epsilon(1e-12));
    // The true minimum over theta lies slightly off theta = z.
    const double t = oracle::golden_min([&](double x) { return bf_two_point(z, x); }, 0.0, 3 * z);
    CHECK(bf_two_point(z, t) <= fpr::min_bf(p, CalibrationKind::simple_z) * (1 + 1e-14));
  }
}

TEST_CASE("calibration orderings", "[fpr][property]") {
  double last[5] = {0, 0, 0, 0, 0};
  for (double p = 1e-8; p < 0.999; p *= 1.02) {
    const double els = fpr::min_bf(p, CalibrationKind::els_all_priors);
    CHECK(fpr::min_bf(p, CalibrationKind::e_q_log_q) <= fpr::min_bf(p, CalibrationKind::e_p_log_p));
    CHECK(els <= fpr::min_bf(p, CalibrationKind::local_z));
    CHECK(els <= fpr::min_bf(p, CalibrationKind::e_p_log_p));
    const double simple = fpr::min_bf(p, CalibrationKind::simple_z);
    CHECK(els <= simple);
    CHECK(simple <= 2.0 * els);
    for (std::size_t i = 0; i < fpr::kAllCalibrations.size(); ++i) {
      const double v = fpr::min_bf(p, fpr::kAllCalibrations[i]);
      CHECK(v >= last[i]);
      last[i] = v;
    }
    if (p < std::exp(-1.0)) {
      CHECK(fpr::prior_bound_fpr_equals_p(p, CalibrationKind::e_p_log_p) ==
            Approx(1.0 / (1.0 - std::exp(1.0) * (1.0 - p) * std::log(p))).epsilon(1e-12));
    }
  }
}

TEST_CASE("the all-priors bound does not cover e q log q", "[fpr]") {
  CHECK(fpr::min_bf(0.05, CalibrationKind::e_q_log_q) <
        fpr::min_bf(0.05, CalibrationKind::els_all_priors));
}

TEST_CASE("prior bound and forward FPR are inverse", "[fpr]") {
  for (CalibrationKind k : fpr::kAllCalibrations) {
    for (double p : {0.001, 0.01, 0.05}) {
      const double bound = fpr::prior_prob_for_fpr(p, 0.05, k);
      const double bf = fpr::min_bf(p, k);
      if (bound < 1.0) CHECK(fpr::fpr_forward(bound, bf) == Approx(0.05).epsilon(1e-12));
      CHECK(fpr::prior_bound_fpr_equals_p(p, k) == fpr::prior_prob_for_fpr(p, p, k));
    }
  }
}

TEST_CASE("calibration names round trip", "[fpr]") {
  for (CalibrationKind k : fpr::kAllCalibrations) {
    CHECK(fpr::parse_calibration(fpr::to_string(k)) == k);
  }
  CHECK_FALSE(fpr::parse_calibration("bogus"));
}
