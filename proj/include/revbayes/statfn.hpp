#pragma once

// Special functions and scalar root finding shared by all analysis modules.

#include <functional>

namespace revbayes {

// A real number in [0, 1]. Construction checks the range; reading is implicit
// so probabilities compose with ordinary arithmetic.
class Probability {
 public:
  constexpr Probability() = default;
  explicit Probability(double value);

  constexpr double value() const { return value_; }
  constexpr operator double() const { return value_; }

 private:
  double value_ = 0.0;
};

namespace stat {

enum class Branch { principal, secondary };

inline constexpr double kInvE = 0.36787944117144233;  // 1/e

// Standard normal CDF.
Probability norm_cdf(double x);

// Upper tail 1 - Phi(x), accurate in the far tail.
Probability norm_sf(double x);

// Inverse standard normal CDF for 0 < p < 1.
double norm_quantile(double p);

// Two-sided critical value z_{alpha/2}, the (1 - alpha/2)-quantile.
double z_critical(double alpha);

// Two-sided p-value 2 * (1 - Phi(|z|)).
Probability two_sided_p(double z);

// P(chi^2_1 >= t) for t >= 0.
Probability chisq1_tail(double t);

// Real Lambert W. The principal branch (W0) is defined on [-1/e, inf) and
// returns w >= -1; the secondary branch (W-1) is defined on [-1/e, 0) and
// returns w <= -1.
double lambert_w(double x, Branch branch);

// Root of f in [lo, hi] given f(lo) * f(hi) <= 0. Terminates when
// |f(x)| <= 1e-12 or the bracket is narrower than 1e-12 * max(1, |x|).
double find_root(const std::function<double(double)>& f, double lo, double hi);

}  // namespace stat
}  // namespace revbayes
