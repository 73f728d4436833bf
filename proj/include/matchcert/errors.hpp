#pragma once

#include <stdexcept>
#include <string>

namespace matchcert {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Construction / argument errors.
class LoopEdgeError : public Error {
public:
    using Error::Error;
};

class VertexOutOfRangeError : public Error {
public:
    using Error::Error;
};

class SizeMismatchError : public Error {
public:
    using Error::Error;
};

class VertexNotInSubgraphError : public Error {
public:
    using Error::Error;
};

class EdgeAbsentError : public Error {
public:
    using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// An operation's own output failed its verification. Always a bug.
class InternalInvariantError : public Error {
public:
    using Error::Error;
};

class LimitExceededError : public Error {
public:
    using Error::Error;
};

// Text format errors (graph6, edge lists, certificate documents).
class ParseError : public Error {
public:
    using Error::Error;
};

class UnsupportedSizeError : public Error {
public:
    using Error::Error;
};

class InvalidCertificateError : public Error {
public:
    using Error::Error;
};

} // namespace matchcert
