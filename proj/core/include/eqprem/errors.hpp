#pragma once

#include <stdexcept>
#include <string>

namespace eqprem {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A required column or structural element of an input file is missing.
class SchemaError : public Error {
public:
    using Error::Error;
};

// The file parsed but its contents violate an invariant (gap, duplicate,
// unparsable number, non-positive value where a log is required).
class DataError : public Error {
public:
    using Error::Error;
};

// A numeric precondition of an operation is violated (window too long,
// non-positive price, zero denominator).
class DomainError : public Error {
public:
    using Error::Error;
};

// Two series that must share dates do not.
class AlignmentError : public Error {
public:
    using Error::Error;
};

// Run configuration is invalid. The CLI maps this to exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Training produced a non-finite loss.
class DivergedError : public Error {
public:
    DivergedError(const std::string& msg, int epoch) : Error(msg), epoch(epoch) {}
    int epoch;
};

}  // namespace eqprem
