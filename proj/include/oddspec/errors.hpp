#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oddspec {

// A caller violated a documented precondition.
class invalid_parameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input is valid but too large for an exact/exhaustive routine.
class capacity_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed serialized input; `offset` is the byte position of the defect.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Reading or writing a file failed.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A formula was evaluated outside its mathematical domain.
class numerical_domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two routes that must agree disagreed; indicates a bug, not bad input.
class internal_consistency_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace oddspec
