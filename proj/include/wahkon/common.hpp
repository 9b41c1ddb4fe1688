#pragma once

#include <stdexcept>
#include <string>

namespace wahkon {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// Cholesky failed even after the jitter ladder was exhausted.
struct NonPositiveDefinite : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct NotFitted : Error {
    using Error::Error;
};

struct InsufficientData : Error {
    using Error::Error;
};

struct InsufficientDraws : Error {
    using Error::Error;
};

// Benchmark function evaluated on its measure-zero singular set.
struct SingularPoint : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace wahkon
