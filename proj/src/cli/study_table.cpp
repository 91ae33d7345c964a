#include "revbayes/cli/study_table.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace revbayes::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string where(std::size_t line, std::size_t column, std::string_view name) {
  std::ostringstream os;
  os << "line " << line << ", column " << column << " (" << name << ")";
  return os.str();
}

long parse_count(std::string_view field, std::size_t line, std::size_t column,
                 std::string_view name) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || value < 0) {
    throw ParseError(where(line, column, name) + ": expected a nonnegative integer, got '" +
                     std::string(field) + "'");
  }
  return value;
}

double parse_real(std::string_view field, std::size_t line, std::size_t column,
                  std::string_view name) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw ParseError(where(line, column, name) + ": expected a number, got '" +
                     std::string(field) + "'");
  }
  return value;
}

const std::vector<std::string_view> kCountsHeader = {"id", "events_t", "n_t", "events_c", "n_c"};
const std::vector<std::string_view> kEstimateHeader = {"id", "estimate", "se"};

}  // namespace

StudyTable parse_study_table(std::string_view text) {
  StudyTable table;
  const std::vector<std::string_view>* header = nullptr;
  std::set<std::string, std::less<>> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    std::string_view line = trim(raw);
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (line.empty() || line.front() == '#') continue;

    const auto fields = split_fields(line);
    if (header == nullptr) {
      if (fields == kCountsHeader) {
        header = &kCountsHeader;
        table.schema = TableSchema::counts;
      } else if (fields == kEstimateHeader) {
        header = &kEstimateHeader;
        table.schema = TableSchema::estimates;
      } else {
        throw ParseError("line " + std::to_string(line_no) +
                         ": header must be 'id,events_t,n_t,events_c,n_c' or 'id,estimate,se'");
      }
      continue;
    }

    if (fields.size() != header->size()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(header->size()) + " fields, found " +
                       std::to_string(fields.size()));
    }
    const std::string id(fields[0]);
    if (id.empty()) throw ParseError(where(line_no, 1, "id") + ": empty study id");
    if (!seen.insert(id).second) {
      throw ParseError(where(line_no, 1, "id") + ": duplicate study id '" + id + "'");
    }

    try {
      if (table.schema == TableSchema::counts) {
        TrialCounts c;
        c.events_treatment = parse_count(fields[1], line_no, 2, "events_t");
        c.n_treatment = parse_count(fields[2], line_no, 3, "n_t");
        c.events_control = parse_count(fields[3], line_no, 4, "events_c");
        c.n_control = parse_count(fields[4], line_no, 5, "n_c");
        table.studies.push_back(Study::from_counts(id, c));
      } else {
        const double est = parse_real(fields[1], line_no, 2, "estimate");
        const double se = parse_real(fields[2], line_no, 3, "se");
        table.studies.push_back(Study::from_estimate(id, est, se));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const InvalidArgument& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }

  if (header == nullptr) throw ParseError("missing header row");
  if (table.studies.empty()) throw ParseError("no studies in table");
  return table;
}

StudyTable read_study_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_study_table(buf.str());
}

}  // namespace revbayes::cli
