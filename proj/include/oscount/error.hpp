#pragma once

#include <stdexcept>
#include <string>

namespace oscount {

enum class ErrorKind {
    argument,
    invariant_unavailable,
    budget_exceeded,
    missing_entry,
    format,
};

// Single exception type for every failure the engine reports. The message
// always names the offending input (class, file, or flag).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace oscount
