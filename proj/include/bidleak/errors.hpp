#pragma once

#include <stdexcept>
#include <string>

namespace bidleak {

/// Invalid argument: out-of-range bid, bad party count, incompatible engine.
class DomainError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// An exhaustive computation would exceed the configured enumeration budget.
class ResourceError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A least-squares system is too ill-conditioned to trust.
class NumericError : public std::runtime_error
{
public:
  NumericError(const std::string& what, double condition)
    : std::runtime_error(what), condition_(condition)
  {
  }

  double condition() const noexcept { return condition_; }

private:
  double condition_;
};

}  // namespace bidleak
