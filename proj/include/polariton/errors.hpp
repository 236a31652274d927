#pragma once

#include <stdexcept>
#include <string>

namespace polariton {

// Base of every error thrown by the library. Callers that only care about
// "something went wrong numerically" can catch this one.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class UnstableSystem : public Error {
public:
    using Error::Error;
};

class DegenerateSpectrum : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class ZeroPhotonWeight : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NoStablePoints : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Bad command line or config file. Maps to exit code 2 in the CLI.
class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace polariton
