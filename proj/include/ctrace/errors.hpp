#ifndef CTRACE_ERRORS_HPP
#define CTRACE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctrace {

// Base class for everything this library throws on purpose.
// exit_code() is the process exit code the CLI maps the error to:
//   2 = invalid input / violated precondition
//   3 = resource guard tripped
//   4 = internal consistency check failed (a bug, never user error)
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual int exit_code() const { return 2; }
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Operands built over different ring contexts.
class MixedContextError : public Error {
public:
    using Error::Error;
};

// Homogeneity / equigeneration violations.
class DegreeError : public Error {
public:
    using Error::Error;
};

// Index sets or matrix shapes out of range.
class BoundsError : public Error {
public:
    using Error::Error;
};

// Theorem hypotheses violated (e.g. m >= n where m < n is required).
class HypothesisError : public Error {
public:
    using Error::Error;
};

class ResourceError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 3; }
};

// Two internal code paths disagreed. Always a bug; surfaced, never swallowed.
class InternalInconsistencyError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 4; }
};

}  // namespace ctrace

#endif
