#include "bgrank/error.hpp"

namespace bgrank {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::NotStrict: return "NotStrict";
    case ErrorKind::NotABSequence: return "NotABSequence";
    case ErrorKind::NoSplit: return "NoSplit";
    case ErrorKind::AmbiguousSplit: return "AmbiguousSplit";
    case ErrorKind::CoverOverflow: return "CoverOverflow";
    case ErrorKind::CoverUnderflow: return "CoverUnderflow";
    case ErrorKind::IncompleteCover: return "IncompleteCover";
    case ErrorKind::NotAPartitionShape: return "NotAPartitionShape";
    case ErrorKind::NotInImage: return "NotInImage";
    case ErrorKind::NotInIotaImage: return "NotInIotaImage";
    case ErrorKind::NotTriangular: return "NotTriangular";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::LargestPartExceedsBound: return "LargestPartExceedsBound";
    case ErrorKind::BoundViolation: return "BoundViolation";
    case ErrorKind::ParameterMismatch: return "ParameterMismatch";
    case ErrorKind::Inconsistent: return "Inconsistent";
  }
  return "UnknownError";
}

}  // namespace bgrank
