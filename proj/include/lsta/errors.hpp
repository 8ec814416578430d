#ifndef LSTA_ERRORS_HPP
#define LSTA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lsta {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rotation angle that is not an integer multiple of pi/4.
class UnsupportedAngle : public Error {
 public:
  using Error::Error;
};

/// A gate targets a level whose symbols are not explicitly indexed
/// (the automaton has to be unfolded first), or the automaton cannot be
/// unfolded as requested.
class NeedsUnfold : public Error {
 public:
  using Error::Error;
};

/// The last layer of a parameterized automaton is not separated from the
/// internal layers (some state has both leaf and internal transitions).
class AmbiguousLastLayer : public Error {
 public:
  using Error::Error;
};

/// The inclusion check visited more vertices than its budget allows.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// An automaton violates the structural invariants (see validate()).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Syntax or semantic error in one of the text formats; carries a 1-based
/// line number (0 when not tied to a line).
class ParseError : public Error {
 public:
  enum class Kind {
    Syntax,
    UnsupportedGate,
    UnsupportedAngle,
    UnsupportedOperation,
    IndexOutOfRange,
    Validation,
  };

  ParseError(Kind kind, int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), kind_(kind), line_(line) {}

  Kind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

 private:
  Kind kind_;
  int line_;
};

}  // namespace lsta

#endif  // LSTA_ERRORS_HPP
