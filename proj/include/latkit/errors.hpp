#pragma once

#include <stdexcept>
#include <string>

namespace latkit {

/// Base class for all latkit errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input validation failures (bad names, malformed structures).
class InvalidInput : public Error {
  public:
    using Error::Error;
};

class UnknownElement : public InvalidInput {
  public:
    explicit UnknownElement(const std::string& name)
        : InvalidInput("unknown element: " + name) {}
};

class CycleDetected : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

/// A cover pair that is already implied by a longer chain of covers.
class NonHasseCover : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class NotComparable : public Error {
  public:
    NotComparable(const std::string& x, const std::string& y)
        : Error("elements not comparable: " + x + " !<= " + y) {}
};

class TrivialInterval : public Error {
  public:
    using Error::Error;
};

class NotBounded : public Error {
  public:
    using Error::Error;
};

class NotALattice : public Error {
  public:
    using Error::Error;
};

class NotAFace : public Error {
  public:
    using Error::Error;
};

class GroundSetOverlap : public Error {
  public:
    using Error::Error;
};

class TooLarge : public Error {
  public:
    using Error::Error;
};

class NotAPartition : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class NotACongruence : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class NotOrderConvex : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class NotSubarrangement : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class DimensionMismatch : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class ParamOutOfRange : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class UnknownName : public InvalidInput {
  public:
    explicit UnknownName(const std::string& name)
        : InvalidInput("unknown catalog name: " + name) {}
};

class IncompleteLabelling : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class SearchBudgetExceeded : public Error {
  public:
    using Error::Error;
};

class InternalError : public Error {
  public:
    using Error::Error;
};

} // namespace latkit
