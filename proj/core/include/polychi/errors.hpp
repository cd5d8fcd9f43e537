#pragma once

#include <stdexcept>
#include <string>

namespace polychi {

// Base for every error the library raises on bad input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Turn sequence or cell list does not describe a polyomino chain.
class InvalidChain : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of an operation (n < 3, alpha = 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Exponent outside the supported guard range.
class RangeError : public Error {
public:
    using Error::Error;
};

// Enumeration request above the configured square-count ceiling.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

// Bisection bracket without a sign change.
class NoSignChange : public Error {
public:
    using Error::Error;
};

// Exchange move whose preconditions do not hold for the given length vector.
class MoveNotApplicable : public Error {
public:
    using Error::Error;
};

}  // namespace polychi
