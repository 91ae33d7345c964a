#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "revbayes/bf.hpp"
#include "revbayes/errors.hpp"

using namespace revbayes;
using Catch::Approx;

TEST_CASE("BF01 under a sceptical prior matches quadrature", "[bf]") {
  for (double z : {0.3, 1.5, 2.5, 3.7}) {
    for (double g : {0.05, 0.5, 3.0, 40.0}) {
      const double se = 0.2;
      const double ref = oracle::bf01(z * se, se, 0.0, g * se * se);
      CHECK(bf::bf01_sceptical(z, g) == Approx(ref).epsilon(1e-9));
      CHECK(bf::bf01_normal_prior(EffectEstimate(z * se, se), NormalPrior::sceptical(g * se * se)) ==
            Approx(ref).epsilon(1e-9));
    }
  }
}

TEST_CASE("BF01 under a shifted prior matches quadrature", "[bf]") {
  const EffectEstimate est(-0.79, 0.42);
  for (double mu : {-1.5, -0.3, 0.4}) {
    for (double tau2 : {0.01, 0.2, 1.0}) {
      CHECK(bf::bf01_normal_prior(est, NormalPrior(mu, tau2)) ==
            Approx(oracle::bf01(-0.79, 0.42, mu, tau2)).epsilon(1e-9));
    }
  }
}

TEST_CASE("local minimum BF equals the minimum over g", "[bf]") {
  for (double z = 1.05; z < 6.0; z += 0.17) {
    const double g_min = oracle::golden_min([z](double g) { return bf::bf01_sceptical(z, g); },
                                            1e-9, 100.0);
    CHECK(g_min == Approx(z * z - 1.0).epsilon(1e-6));
    CHECK(bf::min_bf_local(z) == Approx(bf::bf01_sceptical(z, z * z - 1.0)).epsilon(1e-13));
    CHECK(bf::min_bf_local(z) >= bf::min_bf_els(z));
  }
  CHECK(bf::min_bf_local(0.5) == 1.0);
}

TEST_CASE("sceptical g solutions plug back to gamma", "[bf][property]") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> zd(1.2, 8.0);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  int checked = 0;
  while (checked < 500) {
    const double z = zd(rng);
    const double lo = std::log(bf::min_bf_local(z));
    const double gamma = std::exp(lo * ud(rng) * 0.999);
    if (!(gamma < 1.0)) continue;
    const auto s = bf::sceptical_g_for_gamma(z, gamma);
    CHECK(s.g_small < z * z - 1.0);
    CHECK(s.g_large > z * z - 1.0);
    CHECK(bf::bf01_sceptical(z, s.g_small) == Approx(gamma).epsilon(1e-8));
    if (std::isfinite(s.g_large)) {
      CHECK(bf::bf01_sceptical(z, s.g_large) == Approx(gamma).epsilon(1e-8));
    }
    ++checked;
  }
}

TEST_CASE("sceptical solution absent above the local minimum", "[bf]") {
  CHECK_THROWS_AS(bf::sceptical_g_for_gamma(1.05, 0.1), Undefined);
  try {
    bf::sceptical_g_for_gamma(1.05, 0.1);
  } catch (const Undefined& e) {
    CHECK(std::string(e.what()).find("1/") != std::string::npos);
  }
  CHECK_THROWS_AS(bf::sceptical_g_for_gamma(3.0, 1.0), InvalidArgument);
}

TEST_CASE("advocacy roots plug back to gamma", "[bf][property]") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> zd(-3.5, 3.5);
  std::uniform_real_distribution<double> gd(0.02, 0.9);
  int checked = 0;
  while (checked < 300) {
    const double z = zd(rng);
    const double gamma = gd(rng);
    if (std::fabs(z) < 0.05) continue;
    const EffectEstimate est(0.3 * z, 0.3);
    const auto minimum = bf::advocacy_family_minimum(est, gamma);
    if (minimum.bf01 >= gamma * 0.999) {
      CHECK_THROWS_AS(bf::advocacy_for_gamma(est, gamma), Undefined);
      continue;
    }
    const auto a = bf::advocacy_for_gamma(est, gamma);
    const double zg = bf::z_gamma(gamma);
    for (double mu : {a.mu_small, a.mu_large}) {
      const NormalPrior prior(mu, mu * mu / (zg * zg));
      CHECK(bf::bf01_normal_prior(est, prior) == Approx(gamma).epsilon(1e-8));
    }
    CHECK(a.m_small < a.m_large);
    ++checked;
  }
}

TEST_CASE("advocacy family minimum by golden section", "[bf]") {
  const EffectEstimate est(-0.7864, 0.4188);
  const double zg = bf::z_gamma(1.0 / 3.0);
  auto f = [&](double m) {
    const double mu = m * est.theta_hat();
    return bf::bf01_normal_prior(est, NormalPrior(mu, mu * mu / (zg * zg)));
  };
  const double m_ref = oracle::golden_min(f, 0.01, 5.0);
  const auto minimum = bf::advocacy_family_minimum(est, 1.0 / 3.0);
  CHECK(minimum.m == Approx(m_ref).epsilon(1e-6));
  CHECK(minimum.bf01 == Approx(f(m_ref)).epsilon(1e-10));
}

TEST_CASE("BF12 matches a ratio of marginal likelihoods", "[bf]") {
  for (double z : {2.0, 3.0, 3.7}) {
    for (double g : {0.1, 0.6, 2.0}) {
      const double se = 0.15;
      const double th = z * se;
      // BF12 = m(sceptical) / m(optimistic) = BF02 / BF01.
      const double ref = oracle::bf01(th, se, th, se * se) / oracle::bf01(th, se, 0.0, g * se * se);
      CHECK(bf::bf12_sceptical_vs_optimistic(z, g) == Approx(ref).epsilon(1e-8));
    }
  }
}

TEST_CASE("intrinsic BF is a fixed point of BF12", "[bf]") {
  for (double z : {2.5, 3.0, 3.69, 5.0}) {
    const double gamma = bf::bf_intrinsic(z);
    const double g = bf::sceptical_g_for_gamma(z, gamma).g_small;
    CHECK(bf::bf12_sceptical_vs_optimistic(z, g) == Approx(gamma).epsilon(1e-8));
  }
  CHECK_THROWS_AS(bf::bf_intrinsic(0.5), Undefined);
}

TEST_CASE("z(gamma)", "[bf]") {
  CHECK(bf::z_gamma(1.0) == 0.0);
  CHECK(bf::min_bf_els(bf::z_gamma(0.2)) == Approx(0.2).epsilon(1e-14));
  CHECK_THROWS_AS(bf::z_gamma(0.0), InvalidArgument);
}
