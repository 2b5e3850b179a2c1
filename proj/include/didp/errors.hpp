#pragma once

#include <stdexcept>
#include <string>

namespace didp {

// Raised while evaluating an expression against a state.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for malformed model construction (bad indices, duplicate names, ...).
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the text front ends (expressions, YAML documents, instances).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace didp
