#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "revbayes/errors.hpp"
#include "revbayes/model.hpp"

namespace revbayes::cli {

// Malformed input file. Line numbers are 1-based and count every physical
// line, including comments.
class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

enum class TableSchema { counts, estimates };

struct StudyTable {
  TableSchema schema = TableSchema::counts;
  std::vector<Study> studies;
};

// Comma-separated text with a header row, either
//   id,events_t,n_t,events_c,n_c    or    id,estimate,se
// Blank lines and lines starting with '#' are skipped.
StudyTable parse_study_table(std::string_view text);

StudyTable read_study_table(const std::string& path);

}  // namespace revbayes::cli
