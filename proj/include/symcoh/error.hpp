#pragma once

#include <stdexcept>
#include <string>

namespace symcoh {

enum class ErrorKind {
    invalid_parameter,
    validation,
    size_guard,
    budget_exhausted,
    internal_inconsistency,
};

// Single exception type for the library; the kind drives CLI exit codes.
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

const char* to_string(ErrorKind kind) noexcept;

}  // namespace symcoh
