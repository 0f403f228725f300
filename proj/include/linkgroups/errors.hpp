#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linkgroups {

// Base class for every error this library raises on bad input or
// violated invariants.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CompositionMismatch : public Error {
public:
    using Error::Error;
};

class UnmappedGenerator : public Error {
public:
    using Error::Error;
};

class RelationNotLoop : public Error {
public:
    using Error::Error;
};

class DanglingEndpoint : public Error {
public:
    using Error::Error;
};

class DuplicateLabel : public Error {
public:
    using Error::Error;
};

class NotConnected : public Error {
public:
    using Error::Error;
};

class ConnectorInvalid : public Error {
public:
    using Error::Error;
};

class UnsupportedShape : public Error {
public:
    using Error::Error;
};

class ObjectSetMismatch : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class UnknownGenerator : public Error {
public:
    using Error::Error;
};

class DegreeTooLarge : public Error {
public:
    using Error::Error;
};

// Carries the offset of the offending character in the parsed text.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace linkgroups
