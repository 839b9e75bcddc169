#include "bohr/domain.hpp"

#include <cmath>
#include <string>

#include "bohr/error.hpp"

namespace bohr {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainParameter: return "domain-parameter";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::InvalidRadius: return "invalid-radius";
    case ErrorKind::SamplingFailure: return "sampling-failure";
    case ErrorKind::NonFinite: return "non-finite";
    case ErrorKind::RootNotFound: return "root-not-found";
    case ErrorKind::InapplicableParameter: return "inapplicable-parameter";
    case ErrorKind::PreconditionViolation: return "precondition-violation";
    case ErrorKind::NonzeroConstantTerm: return "nonzero-constant-term";
    case ErrorKind::DivergentSeries: return "divergent-series";
    case ErrorKind::Io: return "io";
    case ErrorKind::Usage: return "usage";
  }
  return "unknown";
}

GammaDomain make_domain(double gamma) {
  if (!std::isfinite(gamma) || gamma < 0.0 || gamma >= 1.0) {
    throw Error(ErrorKind::DomainParameter,
                "gamma must lie in [0, 1), got " + std::to_string(gamma));
  }
  return GammaDomain(gamma);
}

std::string_view to_string(RadiusMethod method) {
  return method == RadiusMethod::ClosedForm ? "closed-form" : "bracketed-root";
}

}  // namespace bohr
