#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

enum class ErrorKind {
  DomainParameter,
  InvalidArgument,
  InvalidRadius,
  SamplingFailure,
  NonFinite,
  RootNotFound,
  InapplicableParameter,
  PreconditionViolation,
  NonzeroConstantTerm,
  DivergentSeries,
  Io,
  Usage,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // True for failures of the numerics rather than of the inputs.
  bool is_numerical() const noexcept {
    return kind_ == ErrorKind::SamplingFailure || kind_ == ErrorKind::NonFinite ||
           kind_ == ErrorKind::RootNotFound || kind_ == ErrorKind::DivergentSeries;
  }

 private:
  ErrorKind kind_;
};

}  // namespace bohr
