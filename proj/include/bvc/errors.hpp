#ifndef BVC_ERRORS_HPP
#define BVC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bvc {

// Domain-rule violation: bad candidate name, ballot not a permutation,
// action illegal for the instance, unsupported reduction target, ...
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configurable cap was exceeded (action-space size, oracle instance size).
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text. Carries the 1-based line number.
class parse_error : public std::runtime_error {
public:
    parse_error(long line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

} // namespace bvc

#endif
