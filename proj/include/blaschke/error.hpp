#pragma once

#include <stdexcept>
#include <string>

namespace blaschke {

enum class ErrorKind {
    Domain,               // argument outside the documented domain
    PoleProximity,        // evaluation too close to a pole 1/conj(a)
    ZeroProximity,        // logarithmic derivative evaluated at a zero
    NonConvergence,       // root finder did not reach its residual target
    NumericalBreakdown,   // an analytically impossible configuration was observed
    Degenerate,           // coincident points where distinct ones are required
    ExtractionAmbiguity,  // an expected isolated critical point could not be told apart
    Parse,
    Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace blaschke
