#pragma once

#include <stdexcept>
#include <string>

namespace quiverk {

/// Base class of every error raised by the library. `kind()` is the stable
/// machine-readable name used by the CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define QUIVERK_DEFINE_ERROR(Name)                                    \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  }

QUIVERK_DEFINE_ERROR(WindowTooSmall);
QUIVERK_DEFINE_ERROR(TooManyParts);
QUIVERK_DEFINE_ERROR(InvalidPermutation);
QUIVERK_DEFINE_ERROR(InvalidPartition);
QUIVERK_DEFINE_ERROR(NotDivisible);
QUIVERK_DEFINE_ERROR(DivisionByZero);
QUIVERK_DEFINE_ERROR(OutOfStaircase);
QUIVERK_DEFINE_ERROR(IndexOutOfRange);
QUIVERK_DEFINE_ERROR(BlockOverflow);
QUIVERK_DEFINE_ERROR(NonOccurring);
QUIVERK_DEFINE_ERROR(MalformedInput);
QUIVERK_DEFINE_ERROR(StabilizationFailure);

#undef QUIVERK_DEFINE_ERROR

}  // namespace quiverk
