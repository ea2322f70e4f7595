#pragma once

#include <stdexcept>
#include <string>

namespace fermatlat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotPrime : Error {
    explicit NotPrime(long n) : Error(std::to_string(n) + " is not prime"), value(n) {}
    NotPrime(long n, const std::string& msg) : Error(msg), value(n) {}
    long value;
};

struct BadSplit : Error {
    using Error::Error;
};

struct SplitInconsistent : Error {
    using Error::Error;
};

struct NotContractible : Error {
    using Error::Error;
};

struct EmptyCuspList : Error {
    using Error::Error;
};

struct NormalizationInKernelComplement : Error {
    using Error::Error;
};

struct WrongExpressionKind : Error {
    using Error::Error;
};

} // namespace fermatlat
