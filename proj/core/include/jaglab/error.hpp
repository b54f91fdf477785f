#ifndef JAGLAB_ERROR_HPP
#define JAGLAB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jaglab {

/// Malformed or out-of-range user input (graph files, family specs, programs).
/// Carries the 1-based line number when the input was a text document.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A size cap was exceeded (group order, configuration index).
class LimitError : public InputError {
 public:
  using InputError::InputError;
};

/// A pebble program did something its declarations forbid at run time
/// (label outside 1..d, variable assigned outside its domain).
class ProgramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An engine invariant broke; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace jaglab

#endif  // JAGLAB_ERROR_HPP
