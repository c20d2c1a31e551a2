#pragma once

#include <stdexcept>

namespace flopkit {

// A precondition on the operation was violated by the caller (bad rank,
// unknown vertex, malformed word, ...).  Maps to exit code 3 in the CLI.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An internal consistency guard tripped (bounded search exhausted, a graph
// component failed to classify, a recomputed table entry disagreed with the
// stored one).  Maps to exit code 4 in the CLI.  Never downgrade these.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace flopkit
