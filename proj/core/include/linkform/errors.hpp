#pragma once

#include <stdexcept>
#include <string>

namespace linkform {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class RingMismatch : public Error {
public:
    using Error::Error;
};

class NoSolution : public Error {
public:
    using Error::Error;
};

class NotACocycle : public Error {
public:
    using Error::Error;
};

class NotInKernel : public Error {
public:
    using Error::Error;
};

class ParityError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

// Raised when a complex fails Poincare duality over the requested ring.
class NotPoincareDuality : public Error {
public:
    NotPoincareDuality(int degree, const std::string& what)
        : Error(what), degree_(degree) {}
    int degree() const { return degree_; }

private:
    int degree_;
};

} // namespace linkform
