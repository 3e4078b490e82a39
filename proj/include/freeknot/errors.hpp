#ifndef FREEKNOT_ERRORS_HPP
#define FREEKNOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace freeknot {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed Gauss code text: illegal characters, empty components.
class SyntaxError : public Error {
public:
    using Error::Error;
};

// A label that does not occur exactly twice.
class LabelCountError : public Error {
public:
    using Error::Error;
};

class UnknownChord : public Error {
public:
    using Error::Error;
};

// Operation requires exactly one unicursal component.
class MultiComponent : public Error {
public:
    using Error::Error;
};

class WrongComponentCount : public Error {
public:
    using Error::Error;
};

// An enumeration would exceed its configured size guard.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// A move site that does not validate against the diagram it is applied to.
class StaleSite : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace freeknot

#endif  // FREEKNOT_ERRORS_HPP
