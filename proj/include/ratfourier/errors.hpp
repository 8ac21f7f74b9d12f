#pragma once

#include <stdexcept>
#include <string>

namespace ratfourier {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter tuple or argument violates a stated invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

/// e^{sigma*N*h} (or another intermediate) is not representable.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A coefficient set was handed to the evaluator of the other direction.
class DirectionError : public Error {
public:
    using Error::Error;
};

class PoleError : public Error {
public:
    using Error::Error;
};

class DenominatorError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Infinite upper limit requested without a damping constant.
class DampingError : public Error {
public:
    using Error::Error;
};

}  // namespace ratfourier
