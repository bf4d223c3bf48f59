#pragma once

#include <stdexcept>
#include <string>

namespace susa {

// Malformed textual input (literals, expressions, data files).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input outside a function's domain.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace susa
