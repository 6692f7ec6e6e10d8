#include "hypostab/error.hpp"

namespace hypostab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NotSemiDissipative: return "NotSemiDissipative";
    case ErrorKind::ZeroDissipativePart: return "ZeroDissipativePart";
    case ErrorKind::NotExplicit: return "NotExplicit";
    case ErrorKind::IdenticallyZero: return "IdenticallyZero";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
    case ErrorKind::FitDegenerate: return "FitDegenerate";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace hypostab
