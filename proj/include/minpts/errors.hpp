#pragma once

#include <stdexcept>
#include <string>

namespace minpts {

// Malformed input data (edge lists, state literals). CLI exit code 2.
class format_error : public std::runtime_error {
public:
    explicit format_error(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Bad arguments or violated preconditions. CLI exit code 1.
class argument_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Numeric domain violations (zeta exponent, gamma range).
class domain_error : public argument_error {
public:
    using argument_error::argument_error;
};

// Refusal to run an exponential search on an oversized instance.
class size_limit_error : public argument_error {
public:
    using argument_error::argument_error;
};

// A proved invariant failed at runtime (e.g. convergence cap exceeded).
// Never caught internally; CLI exit code 3.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace minpts
