#pragma once

#include <stdexcept>
#include <string>

namespace greedyls {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform.
class DimensionError : public Error
{
public:
    using Error::Error;
};

/// A matrix or index set violates its structural invariants.
class ConstructionError : public Error
{
public:
    using Error::Error;
};

/// Malformed Matrix Market, vector, or configuration input.
class FormatError : public Error
{
public:
    using Error::Error;
};

/// Invalid solver or experiment configuration.
class ConfigError : public Error
{
public:
    using Error::Error;
};

/// A caller broke an operation's precondition.
class ContractViolation : public Error
{
public:
    using Error::Error;
};

/// Base for failures caused by the numbers rather than the inputs' shape.
class NumericalError : public Error
{
public:
    using Error::Error;
};

class RankDeficiencyError : public NumericalError
{
public:
    using NumericalError::NumericalError;
};

class InvariantViolation : public NumericalError
{
public:
    using NumericalError::NumericalError;
};

/// A theoretical bound is undefined for the given inputs.
class DegenerateBoundError : public NumericalError
{
public:
    using NumericalError::NumericalError;
};

/// Dense oracle asked to handle a matrix larger than its guard.
class SizeLimitError : public Error
{
public:
    using Error::Error;
};

} // namespace greedyls
