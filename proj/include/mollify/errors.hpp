#pragma once

#include <stdexcept>
#include <string>

namespace mollify {

// Error categories map one-to-one onto CLI exit codes (see cli.hpp).

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

struct AccuracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mollifier whose second moment main term vanishes, or an unbounded ratio.
struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mollify
