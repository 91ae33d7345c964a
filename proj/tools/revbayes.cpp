// revbayes: Reverse-Bayes analyses from the command line.
//
//   revbayes meta data/react2020.csv
//   revbayes ancred --estimate -0.534 --se 0.145 --rate 0.375
//   revbayes bf --counts 95,324,283,683 --gamma 0.1 --mode sceptical
//   revbayes fpr --p 0.05 --fpr 0.05

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "revbayes/cli/commands.hpp"
#include "revbayes/cli/study_table.hpp"
#include "revbayes/errors.hpp"

using namespace revbayes;
using namespace revbayes::cli;

namespace {

void add_estimate_flags(CLI::App* cmd, EstimateInput& in, std::string& counts) {
  cmd->add_option("--estimate", in.estimate, "log odds ratio estimate");
  cmd->add_option("--se", in.se, "standard error of the estimate");
  cmd->add_option("--lower", in.lower, "lower confidence limit (log OR, or OR with --scale or)");
  cmd->add_option("--upper", in.upper, "upper confidence limit");
  cmd->add_option("--counts", counts, "events_t,n_t,events_c,n_c");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reverse-Bayes analysis of published results"};
  app.require_subcommand(1);

  GlobalOptions global;
  std::string scale = "log";
  std::string plot_file;
  app.add_option("--level", global.level, "confidence level")->capture_default_str();
  app.add_flag("--json", global.json, "structured output");
  app.add_option("--scale", scale, "display scale for effects")
      ->check(CLI::IsMember({"log", "or"}))
      ->capture_default_str();
  app.add_option("--plot-data", plot_file, "write plot data as CSV (x,series,value)");

  MetaOptions meta_opts;
  CLI::App* meta = app.add_subcommand("meta", "fixed-effect meta-analysis with diagnostics");
  meta->add_option("file", meta_opts.file, "study table (CSV)")->required();

  AncredOptions ancred_opts;
  std::string ancred_counts;
  CLI::App* ancred = app.add_subcommand("ancred", "Analysis of Credibility");
  add_estimate_flags(ancred, ancred_opts.input, ancred_counts);
  ancred->add_option("--rate", ancred_opts.rate, "event rate for the equivalent trial");

  BfOptions bf_opts;
  std::string bf_counts;
  CLI::App* bf = app.add_subcommand("bf", "Analysis of Credibility with Bayes factors");
  add_estimate_flags(bf, bf_opts.input, bf_counts);
  bf->add_option("--gamma", bf_opts.gamma, "Bayes factor cut-off")->capture_default_str();
  const std::map<std::string, BfMode> modes = {
      {"sceptical", BfMode::sceptical}, {"advocacy", BfMode::advocacy}, {"ic", BfMode::ic}};
  bf->add_option("--mode", bf_opts.mode, "sceptical, advocacy or ic")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));

  FprOptions fpr_opts;
  std::string calibration;
  CLI::App* fpr = app.add_subcommand("fpr", "false positive risk bounds");
  fpr->add_option("--p", fpr_opts.p, "two-sided p-value")->capture_default_str();
  fpr->add_option("--fpr", fpr_opts.fpr, "target false positive risk")->capture_default_str();
  fpr->add_option("--calibration", calibration,
                  "local_z, simple_z, e_p_log_p, e_q_log_q or els_all_priors");
  fpr->add_flag("--fpr-equals-p", fpr_opts.fpr_equals_p, "bound for FPR equal to p");

  for (CLI::App* sub : {meta, ancred, bf, fpr}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  global.scale = scale == "or" ? Scale::odds_ratio : Scale::log;
  try {
    std::optional<Report> report;
    if (*meta) {
      report = run_meta(meta_opts, global);
    } else if (*ancred) {
      if (!ancred_counts.empty()) ancred_opts.input.counts = parse_counts(ancred_counts);
      ancred_opts.input.ratio_limits = global.scale == Scale::odds_ratio;
      report = run_ancred(ancred_opts, global);
    } else if (*bf) {
      if (!bf_counts.empty()) bf_opts.input.counts = parse_counts(bf_counts);
      bf_opts.input.ratio_limits = global.scale == Scale::odds_ratio;
      report = run_bf(bf_opts, global);
    } else if (*fpr) {
      if (!calibration.empty()) {
        fpr_opts.calibration = fpr::parse_calibration(calibration);
        if (!fpr_opts.calibration) throw UsageError("unknown calibration '" + calibration + "'");
      }
      report = run_fpr(fpr_opts, global);
    }

    std::cout << (global.json ? render_json(*report) : render_text(*report, global.scale));
    if (!plot_file.empty()) {
      std::ofstream out(plot_file, std::ios::binary);
      if (!out) throw UsageError("cannot write '" + plot_file + "'");
      out << render_plot_csv(*report);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Undefined& e) {
    std::cerr << "undefined: " << e.what() << "\n";
    return kNonexistence;
  } catch (const InvalidArgument& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kDataError;
  }
  return kSuccess;
}
