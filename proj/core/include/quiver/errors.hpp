#pragma once

#include <stdexcept>
#include <string>

namespace quiver {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its contract: vertex index out of
/// range, absent arrow, malformed construction arguments.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Input outside the mathematical domain of the operation, e.g. a cyclic
/// quiver handed to a path query (path lengths would be unbounded).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A document failed validation. `location()` names the offending field,
/// e.g. "arrows[2].from".
class SchemaError : public Error {
public:
    SchemaError(const std::string& location, const std::string& message)
        : Error(location + ": " + message), location_(location) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

/// An enumeration guard tripped before the result could blow up.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// An event list cannot be applied to the quiver it claims to describe.
class TraceError : public Error {
public:
    using Error::Error;
};

} // namespace quiver
