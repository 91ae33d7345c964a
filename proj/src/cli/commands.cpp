#include "revbayes/cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "revbayes/ancred.hpp"
#include "revbayes/bf.hpp"
#include "revbayes/cli/study_table.hpp"
#include "revbayes/errors.hpp"
#include "revbayes/meta.hpp"

namespace revbayes::cli {
namespace {

// Shortest text that reads back to the same double.
std::string num(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string level_flag(const GlobalOptions& global) { return " --level " + num(global.level); }

void require_level(double level) {
  if (!(level > 0.0 && level < 1.0)) throw UsageError("--level must lie in (0, 1)");
}

void add_interval(Report& report, const std::string& name, const Interval& log_scale) {
  report.add_effect(name + "_lower", log_scale.lower);
  report.add_effect(name + "_upper", log_scale.upper);
}

void add_equivalent_trial(Report& report, const NormalPrior& prior, std::optional<double> rate) {
  const ancred::EquivalentTrial trial = ancred::equivalent_trial(prior, rate);
  const ancred::WholeTrial whole = ancred::whole_counts(trial, rate);
  report.add("trial_events_per_arm_exact", trial.events_per_arm, Unit::real);
  report.add("trial_events_per_arm", whole.events_per_arm, Unit::count);
  if (trial.patients_per_arm) {
    report.add("trial_patients_per_arm_exact", *trial.patients_per_arm, Unit::real);
  }
  if (trial.treatment && trial.control) {
    report.add("trial_treatment_patients_exact", trial.treatment->patients, Unit::real);
    report.add("trial_control_patients_exact", trial.control->patients, Unit::real);
  }
  if (whole.treatment && whole.control) {
    report.add("trial_treatment_events", whole.treatment->events, Unit::count);
    report.add("trial_treatment_patients", whole.treatment->patients, Unit::count);
    report.add("trial_control_events", whole.control->events, Unit::count);
    report.add("trial_control_patients", whole.control->patients, Unit::count);
  }
  if (prior.mean() != 0.0) report.add("trial_allocation_ratio", trial.allocation_ratio, Unit::real);
}

void add_estimate(Report& report, const EffectEstimate& est, double level) {
  report.add_effect("estimate", est.theta_hat());
  report.add("se", est.se(), Unit::real);
  add_interval(report, "ci", est.ci(level));
  report.add("z", est.z(), Unit::real);
  report.add("p", static_cast<double>(est.p_value()), Unit::probability);
}

}  // namespace

EffectEstimate EstimateInput::resolve(double level) const {
  const bool has_est = estimate || se;
  const bool has_ci = lower || upper;
  const int forms = int(has_est) + int(has_ci) + int(counts.has_value());
  if (forms == 0) {
    throw UsageError("supply one of --estimate/--se, --lower/--upper or --counts");
  }
  if (forms > 1) {
    throw UsageError("contradictory inputs: use only one of --estimate/--se, --lower/--upper, "
                     "--counts");
  }
  if (has_est) {
    if (!estimate || !se) throw UsageError("--estimate and --se must be given together");
    return EffectEstimate(*estimate, *se);
  }
  if (has_ci) {
    if (!lower || !upper) throw UsageError("--lower and --upper must be given together");
    if (ratio_limits) {
      if (!(*lower > 0.0 && *upper > 0.0)) {
        throw InvalidArgument("odds ratio limits must be positive");
      }
      return EffectEstimate::from_ci(std::log(*lower), std::log(*upper), level);
    }
    return EffectEstimate::from_ci(*lower, *upper, level);
  }
  return estimate_from_counts(*counts);
}

std::string EstimateInput::describe() const {
  std::string out;
  if (estimate) out += " --estimate " + num(*estimate);
  if (se) out += " --se " + num(*se);
  if (lower) out += " --lower " + num(*lower);
  if (upper) out += " --upper " + num(*upper);
  if ((lower || upper) && ratio_limits) out += " --scale or";
  if (counts) {
    out += " --counts " + std::to_string(counts->events_treatment) + "," +
           std::to_string(counts->n_treatment) + "," + std::to_string(counts->events_control) +
           "," + std::to_string(counts->n_control);
  }
  return out;
}

TrialCounts parse_counts(const std::string& text) {
  std::vector<long> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string field =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    long v = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
      throw UsageError("--counts expects events_t,n_t,events_c,n_c; got '" + text + "'");
    }
    values.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.size() != 4) {
    throw UsageError("--counts expects four integers events_t,n_t,events_c,n_c");
  }
  return {values[0], values[1], values[2], values[3]};
}

Report meta_report(const std::string& file_bytes, const MetaOptions& opts,
                   const GlobalOptions& global) {
  require_level(global.level);
  const StudyTable table = parse_study_table(file_bytes);
  const meta::MetaResult result = meta::pool(table.studies, global.level);
  const double level = global.level;

  Report report("revbayes meta " + opts.file + level_flag(global), sha256_hex(file_bytes));
  report.add("studies", static_cast<long>(result.size()), Unit::count);
  report.add_effect("pooled", result.pooled.mean);
  add_interval(report, "pooled_ci", result.pooled.ci());
  report.add("pooled_precision", result.pooled.precision, Unit::real);
  const EffectEstimate pooled = result.pooled_estimate();
  report.add("pooled_z", pooled.z(), Unit::real);
  report.add("pooled_p", static_cast<double>(pooled.p_value()), Unit::probability);

  const meta::FailSafeN n = meta::failsafe_n(result, level);
  report.add("failsafe_significant", n.significant, Unit::flag);
  if (n.significant) {
    report.add("failsafe_n_exact", n.n_exact, Unit::real);
    report.add("failsafe_n", n.n_integer, Unit::count);
    report.add("pooled_scepticism_limit",
               ancred::sceptical_analysis(pooled, 1.0 - level).S, Unit::real);
  } else {
    report.warn("pooled estimate not significant; fail-safe N is 0");
  }
  if (result.size() == 1) {
    report.warn("n=1: fail-safe N and leave-one-out priors rest on a single study");
  }

  for (const meta::StudyDiagnostics& d : result.per_study) {
    Row row;
    row.push_back({"id", d.id, Unit::text});
    add_effect(row, "estimate", d.estimate.theta_hat());
    const Interval ci = d.estimate.ci(level);
    add_effect(row, "lower", ci.lower);
    add_effect(row, "upper", ci.upper);
    row.push_back({"p", static_cast<double>(d.estimate.p_value()), Unit::probability});
    const double nan = std::nan("");
    const double loo_mean = d.leave_one_out_prior ? d.leave_one_out_prior->mean : nan;
    add_effect(row, "loo_mean", loo_mean);
    row.push_back({"loo_precision",
                   d.leave_one_out_prior ? d.leave_one_out_prior->precision : nan, Unit::real});
    row.push_back({"t_box", d.box ? d.box->t_box : nan, Unit::real});
    row.push_back({"p_box", d.box ? static_cast<double>(d.box->p_box) : nan, Unit::probability});
    report.add_row("studies", std::move(row));

    if (!d.leave_one_out_prior && result.size() > 1) {
      report.warn("study '" + d.id + "': leave-one-out prior undefined (remaining precision "
                  "not positive)");
    }
    report.add_point(d.id, "estimate", d.estimate.theta_hat());
    report.add_point(d.id, "lower", ci.lower);
    report.add_point(d.id, "upper", ci.upper);
    report.add_point(d.id, "p", d.estimate.p_value());
    if (d.box) report.add_point(d.id, "p_box", d.box->p_box);
  }
  const Interval pooled_ci = result.pooled.ci();
  report.add_point("pooled", "estimate", result.pooled.mean);
  report.add_point("pooled", "lower", pooled_ci.lower);
  report.add_point("pooled", "upper", pooled_ci.upper);
  report.add_point("pooled", "p", pooled.p_value());
  return report;
}

Report run_meta(const MetaOptions& opts, const GlobalOptions& global) {
  std::ifstream in(opts.file, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + opts.file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return meta_report(buf.str(), opts, global);
}

Report run_ancred(const AncredOptions& opts, const GlobalOptions& global) {
  require_level(global.level);
  std::string echo = "revbayes ancred" + opts.input.describe();
  if (opts.rate) echo += " --rate " + num(*opts.rate);
  echo += level_flag(global);
  Report report(echo, sha256_hex(echo));

  const double alpha = 1.0 - global.level;
  const EffectEstimate est = opts.input.resolve(global.level);
  add_estimate(report, est, global.level);

  const double zc = stat::z_critical(alpha);
  const bool significant = est.z() * est.z() > zc * zc;
  report.add("significant", significant, Unit::flag);

  if (significant) {
    const ancred::ScepticalAnalysis s = ancred::sceptical_analysis(est, alpha);
    report.add("g", s.g, Unit::real);
    report.add("tau2", s.tau2, Unit::real);
    report.add("scepticism_limit", s.S, Unit::real);
    add_interval(report, "critical", {-s.S, s.S});
    for (auto [name, flavor] : {std::pair{"prior", ancred::Flavor::prior_based},
                                std::pair{"predictive", ancred::Flavor::predictive_based}}) {
      const ancred::CredibilityVerdict v = ancred::intrinsic_credibility(est, alpha, flavor);
      report.add(std::string("credible_") + name, v.credible, Unit::flag);
    }
    const Interval ci = est.ci(global.level);
    report.add("credibility_ratio", ancred::credibility_ratio(ci.lower, ci.upper),
               Unit::real);
    report.add("credibility_ratio_threshold", ancred::credibility_ratio_threshold(alpha),
               Unit::real);
    report.add("p_intrinsic", static_cast<double>(ancred::p_intrinsic(est.z())),
               Unit::probability);
    report.add("p_replication", static_cast<double>(ancred::p_replication(est.z())),
               Unit::probability);
    add_equivalent_trial(report, s.prior(), opts.rate);
  } else {
    const ancred::AdvocacyAnalysis a = ancred::advocacy_prior(est, alpha);
    report.add("m", a.m, Unit::real);
    report.add_effect("mu", a.mu);
    report.add("tau", a.tau, Unit::real);
    report.add_effect("advocacy_limit", a.AL);
    report.add("cv", a.cv, Unit::real);
    report.add("p_intrinsic", static_cast<double>(ancred::p_intrinsic(est.z())),
               Unit::probability);
    report.add("p_replication", static_cast<double>(ancred::p_replication(est.z())),
               Unit::probability);
    add_equivalent_trial(report, a.prior(), opts.rate);
  }
  return report;
}

Report run_bf(const BfOptions& opts, const GlobalOptions& global) {
  require_level(global.level);
  const char* mode = opts.mode == BfMode::sceptical  ? "sceptical"
                     : opts.mode == BfMode::advocacy ? "advocacy"
                                                     : "ic";
  std::string echo = "revbayes bf" + opts.input.describe() + " --gamma " + num(opts.gamma) +
                     " --mode " + mode + level_flag(global);
  Report report(echo, sha256_hex(echo));

  const EffectEstimate est = opts.input.resolve(global.level);
  add_estimate(report, est, global.level);
  const double z = est.z();
  report.add("min_bf_local", bf::min_bf_local(z), Unit::bayes_factor);
  report.add("min_bf_els", bf::min_bf_els(z), Unit::bayes_factor);

  switch (opts.mode) {
    case BfMode::sceptical: {
      if (!(opts.gamma > 0.0 && opts.gamma < 1.0)) {
        throw InvalidArgument("--gamma must lie in (0, 1)");
      }
      report.add("gamma", opts.gamma, Unit::bayes_factor);
      const bf::BfScepticalSolution s = bf::sceptical_prior_for_gamma(est, opts.gamma,
                                                                      global.level);
      report.add("g_small", s.g_small, Unit::real);
      report.add("g_large", s.g_large, Unit::real);
      report.add("recommended", std::string("g_small"), Unit::text);
      add_interval(report, "prior", {std::log(s.prior_interval_or->lower),
                                     std::log(s.prior_interval_or->upper)});
      report.add("bf12", bf::bf12_sceptical_vs_optimistic(z, s.g_small), Unit::bayes_factor);
      for (int i = 0; i <= 120; ++i) {
        const double g = std::pow(10.0, -3.0 + 7.0 * i / 120.0);
        report.add_point(num(g), "bf01", bf::bf01_sceptical(z, g));
      }
      break;
    }
    case BfMode::advocacy: {
      if (!(opts.gamma > 0.0 && opts.gamma < 1.0)) {
        throw InvalidArgument("--gamma must lie in (0, 1)");
      }
      report.add("gamma", opts.gamma, Unit::bayes_factor);
      const bf::BfAdvocacySolution a = bf::advocacy_for_gamma(est, opts.gamma);
      report.add("z_gamma", bf::z_gamma(opts.gamma), Unit::real);
      report.add("cv", a.cv, Unit::real);
      report.add("m_small", a.m_small, Unit::real);
      report.add_effect("mu_small", a.mu_small);
      report.add("tau_small", a.tau_small, Unit::real);
      report.add("m_large", a.m_large, Unit::real);
      report.add_effect("mu_large", a.mu_large);
      report.add("tau_large", a.tau_large, Unit::real);
      report.add("recommended", std::string("m_small"), Unit::text);
      add_interval(report, "prior", {std::log(a.prior_interval_or.lower),
                                     std::log(a.prior_interval_or.upper)});
      const double zg = bf::z_gamma(opts.gamma);
      for (int i = 0; i <= 120; ++i) {
        const double m = 3.0 * i / 120.0;
        if (m == 0.0) continue;
        const double mu = m * est.theta_hat();
        const NormalPrior prior(mu, mu * mu / (zg * zg), PriorRole::advocacy);
        report.add_point(num(m), "bf01", bf::bf01_normal_prior(est, prior));
      }
      break;
    }
    case BfMode::ic:
      report.add("bf_intrinsic", bf::bf_intrinsic(z), Unit::bayes_factor);
      break;
  }
  return report;
}

Report run_fpr(const FprOptions& opts, const GlobalOptions& global) {
  std::string echo = "revbayes fpr --p " + num(opts.p);
  if (!opts.fpr_equals_p) echo += " --fpr " + num(opts.fpr);
  if (opts.calibration) echo += " --calibration " + std::string(fpr::to_string(*opts.calibration));
  if (opts.fpr_equals_p) echo += " --fpr-equals-p";
  Report report(echo, sha256_hex(echo));
  (void)global;

  if (!(opts.p > 0.0 && opts.p < 1.0)) throw InvalidArgument("--p must lie in (0, 1)");
  if (!(opts.fpr > 0.0 && opts.fpr < 1.0)) throw InvalidArgument("--fpr must lie in (0, 1)");

  std::vector<fpr::CalibrationKind> kinds;
  if (opts.calibration) {
    kinds.push_back(*opts.calibration);
  } else {
    kinds.assign(fpr::kAllCalibrations.begin(), fpr::kAllCalibrations.end());
  }

  report.add("p", opts.p, Unit::probability);
  if (!opts.fpr_equals_p) report.add("fpr", opts.fpr, Unit::probability);
  for (fpr::CalibrationKind kind : kinds) {
    const std::string name(fpr::to_string(kind));
    report.add("min_bf_" + name, static_cast<double>(fpr::min_bf(opts.p, kind)),
               Unit::bayes_factor);
    const double bound = opts.fpr_equals_p ? fpr::prior_bound_fpr_equals_p(opts.p, kind)
                                           : fpr::prior_prob_for_fpr(opts.p, opts.fpr, kind);
    report.add("prior_h0_max_" + name, bound, Unit::probability);
  }

  constexpr int kGrid = 200;
  const double log_lo = std::log(1e-4);
  const double log_hi = std::log(0.5);
  for (int i = 0; i <= kGrid; ++i) {
    const double p = std::exp(log_lo + (log_hi - log_lo) * i / kGrid);
    for (fpr::CalibrationKind kind : kinds) {
      if (kind == fpr::CalibrationKind::els_all_priors && !opts.calibration) continue;
      const double bound = opts.fpr_equals_p ? fpr::prior_bound_fpr_equals_p(p, kind)
                                             : fpr::prior_prob_for_fpr(p, opts.fpr, kind);
      report.add_point(num(p), std::string(fpr::to_string(kind)), bound);
    }
  }
  return report;
}

}  // namespace revbayes::cli
