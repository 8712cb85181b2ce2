#pragma once

#include <stdexcept>
#include <string>

namespace lrsk {

// Base of every exception thrown by the library. The CLI maps all of these
// to the "input validation failure" exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedTableau : public Error {
public:
    using Error::Error;
};

class MalformedBiword : public Error {
public:
    using Error::Error;
};

class BoundViolation : public Error {
public:
    using Error::Error;
};

class NonCanonicalComposition : public Error {
public:
    using Error::Error;
};

class InvalidPartition : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace lrsk
