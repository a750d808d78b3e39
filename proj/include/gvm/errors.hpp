#pragma once

#include <stdexcept>
#include <string>

namespace gvm {

enum class ErrorKind {
    IllegalRank,
    UnsupportedFamily,
    UnsupportedCase,
    UnsupportedSubtype,
    NotARoot,
    NotASimpleSystem,
    NotInSubspace,
    NonIntegralOnTheta,
    NotDominantOnTheta,
    NotOrthogonal,
    DuplicateEntries,
    InvalidPartition,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace gvm
