#pragma once

#include <stdexcept>
#include <string>

namespace qauth {

/// Malformed arguments: dimension mismatches, out-of-range indices, bad encodings.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeds an enumeration or construction bound.
class UnsupportedSize : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violation of the quantum-channel contract (re-measuring a consumed qubit).
class ProtocolViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class KeyReuse : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qauth
