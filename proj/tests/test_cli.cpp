#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "revbayes/cli/commands.hpp"
#include "revbayes/cli/study_table.hpp"
#include "revbayes/errors.hpp"

using namespace revbayes;
using namespace revbayes::cli;
using Catch::Approx;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(REVBAYES_TOOL) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kData = std::string(REVBAYES_DATA) + "/react2020.csv";

}  // namespace

TEST_CASE("study table parsing", "[cli]") {
  const StudyTable t = parse_study_table("# comment\nid,estimate,se\n\na,-0.5,0.2\nb,0.1,0.3\n");
  CHECK(t.schema == TableSchema::estimates);
  REQUIRE(t.studies.size() == 2);
  CHECK(t.studies[1].id() == "b");

  const StudyTable c = parse_study_table("id,events_t,n_t,events_c,n_c\r\nx,5,20,8,20\r\n");
  CHECK(c.schema == TableSchema::counts);
  CHECK(c.studies[0].counts()->n_control == 20);
}

TEST_CASE("study table errors carry row and column", "[cli]") {
  auto message = [](const std::string& text) {
    try {
      parse_study_table(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("id,estimate\na,1\n").find("line 1") != std::string::npos);
  CHECK(message("id,estimate,se\na,1,x\n").find("line 2, column 3 (se)") != std::string::npos);
  CHECK(message("id,estimate,se\na,1\n").find("expected 3 fields") != std::string::npos);
  CHECK(message("id,estimate,se\na,1,0.2\na,2,0.2\n").find("duplicate") != std::string::npos);
  const std::string zero = message("id,events_t,n_t,events_c,n_c\nTrialZ,0,20,8,20\n");
  CHECK(zero.find("line 2") != std::string::npos);
  CHECK(zero.find("TrialZ") != std::string::npos);
  CHECK(message("id,estimate,se\n") == "no studies in table");
}

TEST_CASE("estimate input forms", "[cli]") {
  EstimateInput in;
  CHECK_THROWS_AS(in.resolve(0.95), UsageError);
  in.estimate = -0.5;
  CHECK_THROWS_AS(in.resolve(0.95), UsageError);
  in.se = 0.2;
  CHECK(in.resolve(0.95).theta_hat() == -0.5);
  in.lower = -1.0;
  CHECK_THROWS_AS(in.resolve(0.95), UsageError);

  EstimateInput ratio;
  ratio.lower = 0.44;
  ratio.upper = 0.78;
  ratio.ratio_limits = true;
  const EffectEstimate e = ratio.resolve(0.95);
  CHECK(e.theta_hat() == Approx(0.5 * (std::log(0.44) + std::log(0.78))));

  CHECK(parse_counts("1,2,3,4").n_control == 4);
  CHECK_THROWS_AS(parse_counts("1,2,3"), UsageError);
  CHECK_THROWS_AS(parse_counts("1,2,x,4"), UsageError);
}

TEST_CASE("reports are deterministic and scale-consistent", "[cli]") {
  std::ifstream in(kData, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  const Report a = meta_report(buf.str(), {"react2020.csv"}, {});
  const Report b = meta_report(buf.str(), {"react2020.csv"}, {});
  CHECK(render_json(a) == render_json(b));
  CHECK(render_text(a, Scale::odds_ratio) == render_text(b, Scale::odds_ratio));
  CHECK(a.input_digest() == sha256_hex(buf.str()));

  const std::vector<Report> reports = {
      a, run_ancred({{-0.5338, 0.1447}, 0.375}, {}),
      run_bf({{-0.5338, 0.1447}, 0.1, BfMode::sceptical}, {})};
  for (const Report& r : reports) {
    const auto& entries = r.entries();
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
      if (entries[i].unit != Unit::log_or) continue;
      REQUIRE(entries[i + 1].unit == Unit::odds_ratio);
      CHECK(entries[i + 1].name == entries[i].name + "_or");
      CHECK(std::get<double>(entries[i + 1].value) ==
            Approx(std::exp(std::get<double>(entries[i].value))).epsilon(1e-15));
    }
  }
}

TEST_CASE("sha256", "[cli]") {
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("display formatting", "[cli]") {
  CHECK(format_value(1.0 / 148.88, Unit::bayes_factor) == "1/150");
  CHECK(format_value(1.0 / 1.741, Unit::bayes_factor) == "1/1.7");
  CHECK(format_value(1.0 / 64.05, Unit::bayes_factor) == "1/64");
  CHECK(format_value(-0.41664, Unit::log_or) == "-0.42");
  CHECK(format_value(20L, Unit::count) == "20");
}

TEST_CASE("binary exit codes", "[cli][process]") {
  CHECK(run("meta " + kData).code == 0);
  CHECK(run("meta /nonexistent.csv").code == 2);
  CHECK(run("bogus").code == 1);
  CHECK(run("ancred --estimate 0.1").code == 1);
  CHECK(run("ancred --estimate 0.1 --se 0.2 --lower 0.1 --upper 0.3").code == 1);
  CHECK(run("ancred --estimate 0 --se 0.3").code == 3);
  CHECK(run("bf --counts 26,105,29,92 --gamma 0.1").code == 3);
  CHECK(run("bf --estimate -0.5 --se 0.1 --gamma 1.5").code == 2);
  CHECK(run("fpr --p 2").code == 2);
  CHECK(run("fpr --calibration nope").code == 1);
  CHECK(run("ancred --counts 0,20,5,20").code == 2);
}

TEST_CASE("binary output is byte-identical across runs", "[cli][process]") {
  const Run a = run("--json meta " + kData);
  const Run b = run("--json meta " + kData);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["command"].get<std::string>().rfind("revbayes meta", 0) == 0);
  CHECK(j["tables"]["studies"].size() == 7);
}

TEST_CASE("plot data files", "[cli][process]") {
  const std::string tmp =
      (std::filesystem::temp_directory_path() / "revbayes_plot_test.csv").string();
  REQUIRE(run("--plot-data " + tmp + " fpr").code == 0);
  std::ifstream in(tmp);
  std::string header;
  std::getline(in, header);
  CHECK(header == "x,series,value");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 201 * 4);
  std::filesystem::remove(tmp);
}
