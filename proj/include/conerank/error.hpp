#pragma once

#include <stdexcept>
#include <string>

namespace conerank {

/// Failure categories. The numeric values are the CLI exit codes.
enum class ErrorKind {
    validation = 2,        ///< malformed input: dimensions, ids, numbers
    infeasible_cone = 3,   ///< improper cone or empty weight-bound set
    precondition = 4,      ///< algorithm precondition, e.g. a non-pointed cone
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what)
{
    if (!cond) {
        fail(kind, what);
    }
}

} // namespace conerank
