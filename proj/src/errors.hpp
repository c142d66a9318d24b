#pragma once

#include <stdexcept>
#include <string>

namespace mixedlap {

/// Error taxonomy shared by the C++ core, the C API and the CLI exit codes.
enum class ErrorCode {
    invalid_argument,   // bad sizes, parameters out of range, shape mismatch
    numeric_failure,    // quadrature failure, divergence, non-finite data
    io_failure,         // file read/write problems
    verification_failed // a requested check did not pass
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline void require(bool ok, ErrorCode code, const std::string& msg) {
    if (!ok) throw Error(code, msg);
}

inline void require_arg(bool ok, const std::string& msg) {
    require(ok, ErrorCode::invalid_argument, msg);
}

} // namespace mixedlap
