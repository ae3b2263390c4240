#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace phinewton {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated (non-monic divisor, composite
/// modulus, zero polynomial where a nonzero one is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Polynomial text could not be parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string token, std::size_t position)
      : Error(message + " at position " + std::to_string(position) + " (near '" + token + "')"),
        message_(message),
        token_(std::move(token)),
        position_(position) {}

  /// Message without the position suffix.
  const std::string& message() const noexcept { return message_; }
  const std::string& token() const noexcept { return token_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::string token_;
  std::size_t position_;
};

/// One or more named preconditions failed; `violations()` lists them all.
class PreconditionError : public DomainError {
 public:
  explicit PreconditionError(std::vector<std::string> violations)
      : DomainError(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "precondition violated:";
    for (const auto& s : v) out += " " + s;
    return out;
  }
  std::vector<std::string> violations_;
};

/// No prime witness exists for the requested (n, k).
class NoWitness : public Error {
 public:
  NoWitness(long n, long k)
      : Error("no prime witness for (n, k) = (" + std::to_string(n) + ", " + std::to_string(k) + ")"),
        n_(n),
        k_(k) {}
  long n() const noexcept { return n_; }
  long k() const noexcept { return k_; }

 private:
  long n_;
  long k_;
};

/// The bounded factor search would exceed its candidate cap; nothing was searched.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace phinewton
