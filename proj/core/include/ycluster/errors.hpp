#pragma once

#include <stdexcept>
#include <string>

namespace ycluster {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parameters outside the supported families (n < 4, m < 1, bad semifield mix).
class DomainError : public Error {
public:
    using Error::Error;
};

class InvalidVertex : public Error {
public:
    using Error::Error;
};

// Raised by exact division when the remainder does not vanish.  On a scheduled
// run this can only mean a broken builder or schedule.
class NonExactDivision : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

// Two vertices of one composite step were adjacent at mutation time.
class AdjacencyViolation : public Error {
public:
    using Error::Error;
};

// Mutating twice at a vertex did not restore the seed.
class InvolutionViolation : public Error {
public:
    using Error::Error;
};

class ParityError : public Error {
public:
    using Error::Error;
};

class MissingSymbolicRun : public Error {
public:
    using Error::Error;
};

class InsufficientLength : public Error {
public:
    using Error::Error;
};

class NonPositiveValue : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace ycluster
