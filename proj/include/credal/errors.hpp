#pragma once

#include <stdexcept>
#include <string>

namespace credal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Conditioning on an event that has zero probability.
class ZeroMassConditioning : public Error {
public:
    using Error::Error;
};

/// Vectors, sets or partitions built over state spaces of different size.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class AlphaOutOfRange : public Error {
public:
    using Error::Error;
};

/// A conditional prior puts mass outside the cell it is attached to.
class SupportViolation : public Error {
public:
    using Error::Error;
};

class WeightNotNormalized : public Error {
public:
    using Error::Error;
};

/// Structural violations: malformed priors, partitions, labels, empty sets.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace credal
