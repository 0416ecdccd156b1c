#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace corona {

/// Input text could not be parsed. Carries the byte offset of the failure.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error(message), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// An instance exceeds one of the configured oracle capacity caps.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A closed-form invariant was requested for a graph outside the known
/// families while oracle fallback was disabled.
class NeedsOracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace corona
