#include "gvm/errors.hpp"

namespace gvm {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::IllegalRank: return "IllegalRank";
        case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
        case ErrorKind::UnsupportedCase: return "UnsupportedCase";
        case ErrorKind::UnsupportedSubtype: return "UnsupportedSubtype";
        case ErrorKind::NotARoot: return "NotARoot";
        case ErrorKind::NotASimpleSystem: return "NotASimpleSystem";
        case ErrorKind::NotInSubspace: return "NotInSubspace";
        case ErrorKind::NonIntegralOnTheta: return "NonIntegralOnTheta";
        case ErrorKind::NotDominantOnTheta: return "NotDominantOnTheta";
        case ErrorKind::NotOrthogonal: return "NotOrthogonal";
        case ErrorKind::DuplicateEntries: return "DuplicateEntries";
        case ErrorKind::InvalidPartition: return "InvalidPartition";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

}  // namespace gvm
