#ifndef BENTHAD_ERRORS_HPP
#define BENTHAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace benthad {

// Base class for all domain errors. The CLI maps these to exit code 2;
// anything else escaping a command is a bug.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotHadamardError : public Error {
public:
    using Error::Error;
};

class BadEntryError : public Error {
public:
    using Error::Error;
};

class SizeLimitError : public Error {
public:
    using Error::Error;
};

class BadResidueClassError : public Error {
public:
    using Error::Error;
};

class NotPrimePowerError : public Error {
public:
    using Error::Error;
};

class NotSquareOrderError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class EmptyEigenspaceError : public Error {
public:
    using Error::Error;
};

class DimensionTooLargeError : public Error {
public:
    using Error::Error;
};

class NotBentError : public Error {
public:
    using Error::Error;
};

class NotSelfDualError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

class NotSymmetricError : public Error {
public:
    using Error::Error;
};

class GroupTooLargeError : public Error {
public:
    using Error::Error;
};

class OrderMismatchError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// A decoded group element failed its algebraic re-check. Always a bug,
// never a property of the input.
class VerificationFailureError : public Error {
public:
    using Error::Error;
};

} // namespace benthad

#endif
