#pragma once

#include <stdexcept>
#include <string>

namespace sombor {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad edge lists, out-of-range labels, unparsable text.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

// A graph does not have the structure an operation requires
// (e.g. asking for the unique cycle of a tree).
class StructureError : public Error {
public:
    explicit StructureError(const std::string& what) : Error(what) {}
};

// Request exceeds a hard implementation bound (e.g. exhaustive
// canonicalization or enumeration beyond the supported order).
class CapabilityError : public Error {
public:
    explicit CapabilityError(const std::string& what) : Error(what) {}
};

// Request is structurally valid but has an empty answer domain
// (e.g. filtering an enumeration by an infeasible diameter).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

} // namespace sombor
