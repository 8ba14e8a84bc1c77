#ifndef SSM_ERRORS_HPP
#define SSM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ssm {

// Base class for all library failures that are part of the documented
// operation contracts. Configuration / precondition mistakes use
// std::invalid_argument directly.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A composition required by a table lookup is not stored.
class MissingEntryError : public Error {
 public:
  explicit MissingEntryError(const std::string& key)
      : Error("missing table entry for composition " + key), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

// Ratio of table entries with a zero denominator.
class DivisionByZeroError : public Error {
 public:
  explicit DivisionByZeroError(const std::string& key)
      : Error("partition probability is zero at composition " + key) {}
};

// The recursive table construction produced two different values for the
// same composition along two insertion orders.
class PathDependentError : public Error {
 public:
  PathDependentError(std::string key, double canonical, double alternate)
      : Error("path-dependent recursion at composition " + key),
        key_(std::move(key)),
        canonical_(canonical),
        alternate_(alternate) {}
  const std::string& key() const { return key_; }
  double canonical_value() const { return canonical_; }
  double alternate_value() const { return alternate_; }

 private:
  std::string key_;
  double canonical_;
  double alternate_;
};

// Weight sequence truncation would exceed the configured hard cap.
class TruncationOverflowError : public Error {
 public:
  explicit TruncationOverflowError(std::size_t cap)
      : Error("weight truncation exceeded hard cap of " +
              std::to_string(cap) + " atoms") {}
};

// More picks requested than atoms available in a finite weight draw.
class ExhaustedError : public Error {
 public:
  ExhaustedError(std::size_t requested, std::size_t available)
      : Error("requested " + std::to_string(requested) +
              " size-biased picks from a draw with " +
              std::to_string(available) + " atoms") {}
};

// A size-biased prefix is shorter than the composition needs.
class InsufficientPrefixError : public Error {
 public:
  InsufficientPrefixError(std::size_t have, std::size_t need)
      : Error("size-biased prefix has " + std::to_string(have) +
              " picks but " + std::to_string(need) + " are required") {}
};

// Every Monte Carlo importance weight underflowed to log-zero.
class DegenerateWeightsError : public Error {
 public:
  explicit DegenerateWeightsError(const std::string& what) : Error(what) {}
};

class EmptyChainError : public Error {
 public:
  EmptyChainError() : Error("partition chain has no recorded states") {}
};

}  // namespace ssm

#endif  // SSM_ERRORS_HPP
