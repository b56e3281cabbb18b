#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcircle {

// Argument outside the range a function can represent (e.g. I0 overflow).
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// Wavefunction with no nonzero amplitude; cannot be normalized.
class DegenerateStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sampled profile carries too much weight near the Nyquist band.
class AliasingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Profile needs more modes than the configured cap.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation defined only for strictly periodic states.
class UnsupportedStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qcircle
