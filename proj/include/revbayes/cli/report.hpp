#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace revbayes::cli {

// How a number is annotated and displayed. log_or and odds_ratio entries
// come in pairs; text output shows one of the two according to the scale.
enum class Unit { log_or, odds_ratio, probability, bayes_factor, count, real, flag, text };

enum class Scale { log, odds_ratio };

using Value = std::variant<double, long, bool, std::string>;

struct Entry {
  std::string name;
  Value value;
  Unit unit = Unit::real;
};

using Row = std::vector<Entry>;

struct PlotPoint {
  std::string x;
  std::string series;
  double value = 0.0;
};

class Report {
 public:
  Report(std::string command, std::string input_digest);

  void add(std::string name, Value value, Unit unit);
  // Adds `name` on the log odds ratio scale and `name_or` = exp(value).
  void add_effect(const std::string& name, double log_value);
  void add_row(const std::string& table, Row row);
  void warn(std::string message);
  void add_point(std::string x, std::string series, double value);

  const std::string& command() const { return command_; }
  const std::string& input_digest() const { return input_digest_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<std::pair<std::string, std::vector<Row>>>& tables() const { return tables_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  const std::vector<PlotPoint>& plot_points() const { return plot_; }

  // Looks up a top-level entry; throws std::out_of_range if absent.
  const Value& at(const std::string& name) const;
  double number(const std::string& name) const;

 private:
  std::string command_;
  std::string input_digest_;
  std::vector<Entry> entries_;
  std::vector<std::pair<std::string, std::vector<Row>>> tables_;
  std::vector<std::string> warnings_;
  std::vector<PlotPoint> plot_;
};

// Appends an effect pair to a table row.
void add_effect(Row& row, const std::string& name, double log_value);

std::string render_text(const Report& report, Scale scale);
std::string render_json(const Report& report);
// Tidy plot data with header x,series,value.
std::string render_plot_csv(const Report& report);

std::string sha256_hex(std::string_view bytes);

// Display formatting shared by text output.
std::string format_value(const Value& value, Unit unit);

}  // namespace revbayes::cli
