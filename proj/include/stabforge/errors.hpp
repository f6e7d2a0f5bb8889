#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stabforge {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed polynomial or rational text; carries the byte offset of the
// first offending character.
class ParseError : public Error {
public:
  ParseError(std::size_t offset, const std::string& msg)
      : Error(msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

// Operands live in rings with different variable counts.
class RingMismatchError : public Error {
public:
  using Error::Error;
};

// A precondition on the mathematical input was violated.
class DomainError : public Error {
public:
  using Error::Error;
};

// A configured resource cap was hit before the computation finished.
// Never a wrong answer: the caller must enlarge the budget or give up.
class BudgetExhaustedError : public Error {
public:
  using Error::Error;
};

// Interpolation did not stabilize within the m-cap.
class RegularityError : public Error {
public:
  using Error::Error;
};

// The slope-defect integral diverges (envelope slope >= 2 at infinity).
class DivergentIntegralError : public Error {
public:
  using Error::Error;
};

// Degeneration has a component of multiplicity > 1 where the asymptotic
// formula requires multiplicity-free data.
class MultipleFibersError : public Error {
public:
  using Error::Error;
};

}  // namespace stabforge
