#pragma once

#include <stdexcept>
#include <string>

namespace hyperfan {

/** Base class for every error raised by the library. */
class HyperfanError : public std::runtime_error
{
  public:
    explicit HyperfanError(const std::string& what) : std::runtime_error(what) {}
};

/** Vector or matrix dimensions do not agree. */
class DimensionMismatch : public HyperfanError
{
  public:
    explicit DimensionMismatch(const std::string& what) : HyperfanError(what) {}
};

/** An argument violates a documented precondition (zero hyperplane, zero vector, ...). */
class InvalidInput : public HyperfanError
{
  public:
    explicit InvalidInput(const std::string& what) : HyperfanError(what) {}
};

/** A point lies on an active hyperplane where a generic point is required. */
class NonGenericPoint : public HyperfanError
{
  public:
    explicit NonGenericPoint(const std::string& what) : HyperfanError(what) {}
};

/** A point lies outside the support cone. */
class OutsideSupport : public HyperfanError
{
  public:
    explicit OutsideSupport(const std::string& what) : HyperfanError(what) {}
};

/** An exponential enumeration was refused because its size exceeds the configured cap. */
class CapExceeded : public HyperfanError
{
  public:
    explicit CapExceeded(const std::string& what) : HyperfanError(what) {}
};

/** An internal consistency check failed; indicates a bug or a violated precondition. */
class InvariantViolation : public HyperfanError
{
  public:
    explicit InvariantViolation(const std::string& what) : HyperfanError(what) {}
};

}  // namespace hyperfan
