#pragma once

#include <stdexcept>
#include <string>

namespace vertexlab {

/// Caller handed us inconsistent or out-of-contract input.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A series comparison or solve was requested beyond the window on which
/// the operands are authoritative. Never silently padded with zeros.
class InsufficientWindowError : public ValidationError {
public:
    explicit InsufficientWindowError(const std::string& msg) : ValidationError(msg) {}
};

/// A configured search/memory limit was exceeded; the partial result is discarded.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal cross-check failed (cut-off instability, non-polynomial point
/// count, residual that should vanish). Indicates a model or convention bug.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace vertexlab
