#pragma once

#include <stdexcept>
#include <string>

namespace totpos {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};
struct TagMismatch : Error {
    using Error::Error;
};
struct DatumMismatch : Error {
    using Error::Error;
};
struct NotReduced : Error {
    using Error::Error;
};
struct InvalidWordPair : Error {
    using Error::Error;
};
struct NotADescent : Error {
    using Error::Error;
};
struct NotInN : Error {
    using Error::Error;
};
struct InvalidChart : Error {
    using Error::Error;
};
struct TypeNotSupported : Error {
    using Error::Error;
};
struct NotTotallyPositive : Error {
    using Error::Error;
};
struct EvaluationAtPole : Error {
    using Error::Error;
};
struct BoxTooLarge : Error {
    using Error::Error;
};

}  // namespace totpos
