#include <catch_amalgamated.hpp>

#include <cmath>

#include "revbayes/errors.hpp"
#include "revbayes/model.hpp"

using namespace revbayes;
using Catch::Approx;

TEST_CASE("Woolf estimate from a 2x2 table", "[model]") {
  const EffectEstimate e = estimate_from_counts({95, 324, 283, 683});
  const double theta = std::log((95.0 / 229.0) / (283.0 / 400.0));
  const double se = std::sqrt(1.0 / 95 + 1.0 / 229 + 1.0 / 283 + 1.0 / 400);
  CHECK(e.theta_hat() == Approx(theta).epsilon(1e-14));
  CHECK(e.se() == Approx(se).epsilon(1e-14));
  CHECK(e.z() == Approx(theta / se).epsilon(1e-14));
}

TEST_CASE("zero cells and impossible counts are rejected", "[model]") {
  CHECK_THROWS_AS(estimate_from_counts({0, 10, 3, 10}), InvalidArgument);
  CHECK_THROWS_AS(estimate_from_counts({10, 10, 3, 10}), InvalidArgument);
  CHECK_THROWS_AS(estimate_from_counts({11, 10, 3, 10}), InvalidArgument);
  CHECK_THROWS_AS(estimate_from_counts({1, 0, 3, 10}), InvalidArgument);
  try {
    Study::from_counts("TrialX", {0, 10, 3, 10});
    FAIL("expected an exception");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("TrialX") != std::string::npos);
  }
}

TEST_CASE("confidence interval round trip", "[model]") {
  for (double level : {0.8, 0.9, 0.95, 0.99}) {
    const EffectEstimate e(-0.41, 0.23);
    const Interval ci = e.ci(level);
    const EffectEstimate back = EffectEstimate::from_ci(ci.lower, ci.upper, level);
    CHECK(back.theta_hat() == Approx(-0.41).epsilon(1e-13));
    CHECK(back.se() == Approx(0.23).epsilon(1e-13));
  }
  CHECK_THROWS_AS(EffectEstimate::from_ci(1.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(EffectEstimate::from_ci(1.0, 0.5), InvalidArgument);
  CHECK_THROWS_AS(EffectEstimate(0.1, 0.0), InvalidArgument);
  CHECK_THROWS_AS(EffectEstimate(0.1, -1.0), InvalidArgument);
}

TEST_CASE("normal priors", "[model]") {
  const NormalPrior flat = NormalPrior::flat();
  CHECK(flat.precision() == 0.0);
  CHECK_THROWS_AS(flat.interval(), Undefined);

  const NormalPrior s = NormalPrior::sceptical(0.04);
  CHECK(s.mean() == 0.0);
  CHECK(s.sd() == Approx(0.2));
  CHECK(s.interval(0.95).upper == Approx(0.2 * 1.959963984540054).epsilon(1e-13));
  CHECK_THROWS_AS(NormalPrior(0.1, 0.04, PriorRole::sceptical), InvalidArgument);
  CHECK_THROWS_AS(NormalPrior(0.0, 0.0), InvalidArgument);

  const NormalPrior o = NormalPrior::optimistic(EffectEstimate(-0.5, 0.2));
  CHECK(o.mean() == -0.5);
  CHECK(o.variance() == Approx(0.04));
  CHECK(std::string(to_string(o.role())) == "optimistic");
}

TEST_CASE("odds-form Bayes forward and reverse", "[model]") {
  const double post = forward_posterior_odds(0.25, 3.0);
  CHECK(post == Approx(0.75));
  CHECK(reverse_prior_odds(post, 3.0) == Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(forward_posterior_odds(-1.0, 3.0), InvalidArgument);
  CHECK_THROWS_AS(reverse_prior_odds(1.0, 0.0), InvalidArgument);
}
