#pragma once

#include <stdexcept>
#include <string>

namespace revbayes {

// A precondition on an argument was violated (out of range, wrong sign,
// malformed input).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested quantity does not exist for these inputs, e.g. a sceptical
// prior for a non-significant estimate or a Bayes factor cut-off below the
// attainable minimum.
class Undefined : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace revbayes
