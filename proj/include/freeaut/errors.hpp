#ifndef FREEAUT_ERRORS_HPP
#define FREEAUT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freeaut {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed word text.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t position)
      : Error(msg + " (at offset " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Letter outside the basis, or operands of different rank.
class RankError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A level-set enumeration would exceed the configured state cap. This is an
// "unknown" outcome, not a negative answer.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t cap, std::size_t reached)
      : Error("level set exceeds cap of " + std::to_string(cap) + " classes (reached " +
              std::to_string(reached) + ")"),
        cap_(cap),
        reached_(reached) {}
  std::size_t cap() const noexcept { return cap_; }
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t cap_;
  std::size_t reached_;
};

// An internal cross-check failed; always indicates a bug.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace freeaut

#endif  // FREEAUT_ERRORS_HPP
