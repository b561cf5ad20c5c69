#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lda {

// Bad input: malformed files, expressions, or options. The CLI maps these to exit code 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The input was well formed but the mathematics failed. The CLI maps these to exit code 2.
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : MathError {
  DivisionByZero() : MathError("division by zero") {}
  using MathError::MathError;
};

struct NoLeadingTerm : MathError {
  NoLeadingTerm() : MathError("difference polynomial has no leading term") {}
};

// A completion step produced a nonzero constant, so 1 lies in the generated module.
struct InconsistentSystem : MathError {
  InconsistentSystem() : MathError("inconsistent system: a nonzero constant is a consequence") {}
};

struct InfiniteResidueBasis : MathError {
  using MathError::MathError;
};

struct CompletionLimitExceeded : MathError {
  using MathError::MathError;
};

struct ParityError : MathError {
  using MathError::MathError;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t position, const std::string& message)
      : InputError("parse error at " + std::to_string(position) + ": " + message), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct ArityError : ParseError {
  using ParseError::ParseError;
};

struct NegativeShiftError : ParseError {
  using ParseError::ParseError;
};

struct UnknownSymbolError : ParseError {
  using ParseError::ParseError;
};

struct ValidationError : InputError {
  using InputError::InputError;
};

}  // namespace lda
