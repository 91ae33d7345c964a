#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "revbayes/cli/report.hpp"
#include "revbayes/fpr.hpp"
#include "revbayes/model.hpp"

namespace revbayes::cli {

// Bad flag combinations; maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kSuccess = 0, kUsage = 1, kDataError = 2, kNonexistence = 3 };

struct GlobalOptions {
  double level = kDefaultLevel;
  bool json = false;
  Scale scale = Scale::log;
};

// One of the three ways to describe a single estimate on the command line.
struct EstimateInput {
  std::optional<double> estimate;
  std::optional<double> se;
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<TrialCounts> counts;
  // Interval limits are odds ratios rather than log odds ratios.
  bool ratio_limits = false;

  EffectEstimate resolve(double level) const;
  std::string describe() const;
};

struct MetaOptions {
  std::string file;
};

struct AncredOptions {
  EstimateInput input;
  std::optional<double> rate;
};

enum class BfMode { sceptical, advocacy, ic };

struct BfOptions {
  EstimateInput input;
  double gamma = 0.1;
  BfMode mode = BfMode::sceptical;
};

struct FprOptions {
  double p = 0.05;
  double fpr = 0.05;
  std::optional<fpr::CalibrationKind> calibration;  // all when absent
  bool fpr_equals_p = false;
};

Report meta_report(const std::string& file_bytes, const MetaOptions& opts,
                   const GlobalOptions& global);
Report run_meta(const MetaOptions& opts, const GlobalOptions& global);
Report run_ancred(const AncredOptions& opts, const GlobalOptions& global);
Report run_bf(const BfOptions& opts, const GlobalOptions& global);
Report run_fpr(const FprOptions& opts, const GlobalOptions& global);

// Parses "a,n_t,c,n_c".
TrialCounts parse_counts(const std::string& text);

}  // namespace revbayes::cli
