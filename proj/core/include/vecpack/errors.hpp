#pragma once

#include <stdexcept>
#include <string>

namespace vecpack {

/// Input document does not conform to its schema. The message starts with
/// the offending field path, e.g. "jobs[0][1]: coordinate > 1".
class SchemaError : public std::invalid_argument {
public:
    SchemaError(const std::string& path, const std::string& what)
        : std::invalid_argument(path.empty() ? what : path + ": " + what), path_(path) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// An exhaustive search would exceed its configured budget. Raised before
/// (or instead of) returning a result that could be mistaken for exact.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A reduction's completeness witness or soundness claim failed its
/// independent re-check. Always an implementation bug when it fires.
class VerificationFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace vecpack
