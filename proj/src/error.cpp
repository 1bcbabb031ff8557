#include "firefront/error.hpp"

namespace firefront {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Eval: return "EvalError";
    case ErrorKind::FieldRange: return "FieldRangeError";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::SingularTensor: return "SingularTensor";
    case ErrorKind::NoRoot: return "NoRoot";
    case ErrorKind::AmbiguousRoot: return "AmbiguousRoot";
    case ErrorKind::NonConvexMetric: return "NonConvexMetric";
    case ErrorKind::DegenerateCurve: return "DegenerateCurve";
    case ErrorKind::EmptyFront: return "EmptyFront";
    case ErrorKind::TimeDependentMetric: return "TimeDependentMetric";
    case ErrorKind::Config: return "ConfigError";
    case ErrorKind::Numerical: return "NumericalFailure";
  }
  return "Unknown";
}

}  // namespace firefront
