#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace splinedim {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Invalid partition geometry. `indices` names the offending vertices or
/// edges (which one is stated in the message).
class GeometryError : public Error {
public:
    GeometryError(const std::string& msg, std::vector<std::size_t> indices = {})
        : Error(msg), indices_(std::move(indices)) {}
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }

private:
    std::vector<std::size_t> indices_;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class SingularMap : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class DegenerateInput : public Error {
public:
    using Error::Error;
};

class RetryExhausted : public Error {
public:
    using Error::Error;
};

} // namespace splinedim
