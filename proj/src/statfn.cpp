#include "revbayes/statfn.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "revbayes/errors.hpp"

namespace revbayes {

Probability::Probability(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw InvalidArgument("probability out of [0, 1]: " + std::to_string(value));
  }
}

namespace stat {
namespace {

constexpr double kE = 2.718281828459045;
constexpr double kInvSqrt2 = 0.7071067811865476;
constexpr double kInvSqrt2Pi = 0.3989422804014327;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw InvalidArgument(std::string(what) + ": argument must be finite");
  }
}

double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

// Wichura (1988), algorithm AS 241 (PPND16). Relative accuracy about 1e-16.
double ppnd16(double p) {
  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    const double num =
        (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
              6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
            1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
          1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) * q;
    const double den =
        ((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
              3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
            5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
          4.2313330701600911252e+1) * r + 1.0;
    return num / den;
  }

  double r = std::sqrt(-std::log(q < 0.0 ? p : 1.0 - p));
  double x;
  if (r <= 5.0) {
    r -= 1.6;
    const double num =
        ((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
              2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
            3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
          4.63033784615654529590e+0) * r + 1.42343711074968357734e+0;
    const double den =
        ((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
              1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
            6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
          2.05319162663775882187e+0) * r + 1.0;
    x = num / den;
  } else {
    r -= 5.0;
    const double num =
        ((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
            2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
          5.46378491116411436990e+0) * r + 6.65790464350110377720e+0;
    const double den =
        ((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
              1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
            1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
          5.99832206555887937690e-1) * r + 1.0;
    x = num / den;
  }
  return q < 0.0 ? -x : x;
}

double lambert_initial_guess(double x, Branch branch) {
  if (x < -0.25) {
    // Series about the branch point in p = sqrt(2 (e x + 1)).
    const double p = std::sqrt(std::max(0.0, 2.0 * (kE * x + 1.0)));
    const double s = branch == Branch::principal ? p : -p;
    return -1.0 + s - s * s / 3.0 + 11.0 / 72.0 * s * s * s;
  }
  if (branch == Branch::secondary) {
    const double l1 = std::log(-x);
    const double l2 = std::log(-l1);
    return l1 - l2 + l2 / l1;
  }
  if (x < 0.0) return x - x * x;
  if (x <= kE) {
    const double l = std::log1p(x);
    return l * (1.0 - std::log1p(l) / (2.0 + l));
  }
  const double l1 = std::log(x);
  const double l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

}  // namespace

Probability norm_cdf(double x) {
  require_finite(x, "norm_cdf");
  return Probability(0.5 * std::erfc(-x * kInvSqrt2));
}

Probability norm_sf(double x) {
  require_finite(x, "norm_sf");
  return Probability(0.5 * std::erfc(x * kInvSqrt2));
}

double norm_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw InvalidArgument("norm_quantile: p must lie strictly inside (0, 1)");
  }
  double x = ppnd16(p);
  // One Newton step against the CDF, taken on the smaller tail.
  const double density = norm_pdf(x);
  if (density > 0.0) {
    if (p < 0.5) {
      x -= (norm_cdf(x).value() - p) / density;
    } else {
      x += (norm_sf(x).value() - (1.0 - p)) / density;
    }
  }
  return x;
}

double z_critical(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidArgument("significance level alpha must lie in (0, 1)");
  }
  return -norm_quantile(0.5 * alpha);
}

Probability two_sided_p(double z) {
  require_finite(z, "two_sided_p");
  return Probability(std::erfc(std::fabs(z) * kInvSqrt2));
}

Probability chisq1_tail(double t) {
  if (std::isnan(t) || t < 0.0) {
    throw InvalidArgument("chisq1_tail: statistic must be nonnegative");
  }
  if (std::isinf(t)) return Probability(0.0);
  return Probability(std::erfc(std::sqrt(0.5 * t)));
}

double lambert_w(double x, Branch branch) {
  require_finite(x, "lambert_w");
  if (x < -kInvE) {
    throw InvalidArgument("lambert_w: argument below -1/e");
  }
  if (branch == Branch::secondary && x >= 0.0) {
    throw InvalidArgument("lambert_w: secondary branch requires -1/e <= x < 0");
  }
  if (x == -kInvE) return -1.0;
  if (x == 0.0) return 0.0;

  double w = lambert_initial_guess(x, branch);
  for (int iter = 0; iter < 50; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (f == 0.0 || wp1 == 0.0) break;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::fabs(step) <= 1e-14 * std::fabs(w)) break;
  }
  return branch == Branch::principal ? std::max(w, -1.0) : std::min(w, -1.0);
}

double find_root(const std::function<double(double)>& f, double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw InvalidArgument("find_root: bracket must be finite");
  }
  if (lo > hi) std::swap(lo, hi);
  const double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::isnan(flo) || std::isnan(fhi) || std::signbit(flo) == std::signbit(fhi)) {
    throw InvalidArgument("find_root: interval does not bracket a root");
  }

  auto narrow = [](double a, double b) {
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(b - a) <= 1e-12 * scale;
  };
  std::uintmax_t max_iter = 500;
  const auto [a, b] =
      boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, narrow, max_iter);
  return a == b ? a : 0.5 * (a + b);
}

}  // namespace stat
}  // namespace revbayes
