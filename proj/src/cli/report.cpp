#include "revbayes/cli/report.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace revbayes::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

const char* unit_name(Unit unit) {
  switch (unit) {
    case Unit::log_or: return "log_or";
    case Unit::odds_ratio: return "or";
    case Unit::probability: return "probability";
    case Unit::bayes_factor: return "bf01";
    case Unit::count: return "count";
    case Unit::real: return "real";
    case Unit::flag: return "flag";
    case Unit::text: return "text";
  }
  return "real";
}

bool visible(Unit unit, Scale scale) {
  if (unit == Unit::log_or) return scale == Scale::log;
  if (unit == Unit::odds_ratio) return scale == Scale::odds_ratio;
  return true;
}

std::string printf_string(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

// Rounds to two significant figures and prints without an exponent.
std::string two_significant(double v) {
  if (v == 0.0 || !std::isfinite(v)) return printf_string("%g", v);
  const int digits = static_cast<int>(std::floor(std::log10(std::fabs(v))));
  const int decimals = std::max(0, 1 - digits);
  const double scale = std::pow(10.0, 1 - digits);
  const double rounded = std::round(v * scale) / scale;
  char fmt[16];
  std::snprintf(fmt, sizeof fmt, "%%.%df", decimals);
  return printf_string(fmt, rounded);
}

ordered_json to_json(const Value& v) {
  return std::visit([](const auto& x) -> ordered_json {
    using T = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<T, double>) {
      if (!std::isfinite(x)) return nullptr;
    }
    return x;
  }, v);
}

ordered_json to_json(const Entry& e) {
  ordered_json j;
  j["name"] = e.name;
  j["value"] = to_json(e.value);
  j["unit"] = unit_name(e.unit);
  return j;
}

std::string csv_number(double v) { return printf_string("%.10g", v); }

}  // namespace

Report::Report(std::string command, std::string input_digest)
    : command_(std::move(command)), input_digest_(std::move(input_digest)) {}

void Report::add(std::string name, Value value, Unit unit) {
  entries_.push_back({std::move(name), std::move(value), unit});
}

void Report::add_effect(const std::string& name, double log_value) {
  add(name, log_value, Unit::log_or);
  add(name + "_or", std::exp(log_value), Unit::odds_ratio);
}

void add_effect(Row& row, const std::string& name, double log_value) {
  row.push_back({name, log_value, Unit::log_or});
  row.push_back({name + "_or", std::exp(log_value), Unit::odds_ratio});
}

void Report::add_row(const std::string& table, Row row) {
  for (auto& [name, rows] : tables_) {
    if (name == table) {
      rows.push_back(std::move(row));
      return;
    }
  }
  tables_.push_back({table, {std::move(row)}});
}

void Report::warn(std::string message) { warnings_.push_back(std::move(message)); }

void Report::add_point(std::string x, std::string series, double value) {
  plot_.push_back({std::move(x), std::move(series), value});
}

const Value& Report::at(const std::string& name) const {
  for (const Entry& e : entries_) {
    if (e.name == name) return e.value;
  }
  throw std::out_of_range("no report entry named '" + name + "'");
}

double Report::number(const std::string& name) const {
  const Value& v = at(name);
  if (const double* d = std::get_if<double>(&v)) return *d;
  if (const long* l = std::get_if<long>(&v)) return static_cast<double>(*l);
  throw std::out_of_range("report entry '" + name + "' is not numeric");
}

std::string format_value(const Value& value, Unit unit) {
  if (const auto* s = std::get_if<std::string>(&value)) return *s;
  if (const auto* b = std::get_if<bool>(&value)) return *b ? "true" : "false";
  if (const auto* l = std::get_if<long>(&value)) return std::to_string(*l);
  const double v = std::get<double>(value);
  if (std::isnan(v)) return "NA";
  if (!std::isfinite(v)) return v > 0 ? "inf" : "-inf";
  switch (unit) {
    case Unit::log_or:
    case Unit::odds_ratio: return printf_string("%.2f", v);
    case Unit::bayes_factor:
      return v < 1.0 ? "1/" + two_significant(1.0 / v) : two_significant(v);
    case Unit::probability: return printf_string("%.3g", v);
    case Unit::count: return printf_string("%.1f", v);
    default: return printf_string("%.4g", v);
  }
}

std::string render_text(const Report& report, Scale scale) {
  std::ostringstream os;
  os << report.command() << "\n";
  os << "input sha256 " << report.input_digest() << "\n";

  std::size_t width = 0;
  for (const Entry& e : report.entries()) {
    if (visible(e.unit, scale)) width = std::max(width, e.name.size());
  }
  for (const Entry& e : report.entries()) {
    if (!visible(e.unit, scale)) continue;
    os << "  " << e.name << std::string(width - e.name.size() + 2, ' ')
       << format_value(e.value, e.unit) << "\n";
  }

  for (const auto& [name, rows] : report.tables()) {
    os << "\n" << name << "\n";
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header;
    for (const Entry& e : rows.front()) {
      if (visible(e.unit, scale)) header.push_back(e.name);
    }
    cells.push_back(header);
    for (const Row& row : rows) {
      std::vector<std::string> line;
      for (const Entry& e : row) {
        if (visible(e.unit, scale)) line.push_back(format_value(e.value, e.unit));
      }
      cells.push_back(std::move(line));
    }
    std::vector<std::size_t> widths(header.size(), 0);
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size() && i < widths.size(); ++i) {
        widths[i] = std::max(widths[i], line[i].size());
      }
    }
    for (const auto& line : cells) {
      os << " ";
      for (std::size_t i = 0; i < line.size(); ++i) {
        os << " " << line[i] << std::string(widths[i] - line[i].size(), ' ');
      }
      os << "\n";
    }
  }

  for (const std::string& w : report.warnings()) os << "warning: " << w << "\n";
  return os.str();
}

std::string render_json(const Report& report) {
  ordered_json j;
  j["command"] = report.command();
  j["input_digest"] = report.input_digest();
  ordered_json results = ordered_json::array();
  for (const Entry& e : report.entries()) results.push_back(to_json(e));
  j["results"] = results;
  ordered_json tables = ordered_json::object();
  for (const auto& [name, rows] : report.tables()) {
    ordered_json arr = ordered_json::array();
    for (const Row& row : rows) {
      ordered_json r = ordered_json::array();
      for (const Entry& e : row) r.push_back(to_json(e));
      arr.push_back(r);
    }
    tables[name] = arr;
  }
  j["tables"] = tables;
  j["warnings"] = report.warnings();
  return j.dump(2) + "\n";
}

std::string render_plot_csv(const Report& report) {
  std::ostringstream os;
  os << "x,series,value\n";
  for (const PlotPoint& p : report.plot_points()) {
    os << p.x << "," << p.series << "," << csv_number(p.value) << "\n";
  }
  return os.str();
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

}  // namespace revbayes::cli
