#pragma once

#include <stdexcept>
#include <string>

namespace folia {

// Every failure the library reports derives from Error. The CLI maps the
// concrete type onto its exit code, so new kinds must pick a base here.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input: parse errors, arity mismatches,
// descent/integrability failures.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Randomized genericity (plane choice, transversality) did not certify
// within the retry budget.
class GenericityError : public Error {
 public:
  using Error::Error;
};

// A configured computational budget (S-pairs, degree, stabilization cap)
// was exhausted. Never a wrong answer, only no answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : InvalidInput(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace folia
