#pragma once

#include <stdexcept>
#include <string>

namespace pcetd {

/// Bad grid, bad enum string, mismatched dimensions, out-of-domain argument.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A linear solve or factorization failed to meet its residual contract.
class NumericalFailure : public std::runtime_error {
public:
  NumericalFailure(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

private:
  double residual_;
};

/// A time integration produced a non-finite or absurdly large state entry.
class BlowUpError : public std::runtime_error {
public:
  BlowUpError(const std::string& what, int step, double time)
      : std::runtime_error(what), step_(step), time_(time) {}
  int step() const { return step_; }
  double time() const { return time_; }

private:
  int step_;
  double time_;
};

} // namespace pcetd
