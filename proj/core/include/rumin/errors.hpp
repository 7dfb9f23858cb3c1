#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rumin {

// Base class for every error raised by the library. what() carries a short
// tag such as "JacobiViolation(1,2,3)" so callers can print it verbatim.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class ParseError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("DivisionByZero") {}
};

class TowerInsufficient : public Error {
public:
    using Error::Error;
};

class JacobiViolation : public InvalidInput {
public:
    JacobiViolation(int i, int j, int k)
        : InvalidInput("JacobiViolation(" + std::to_string(i) + "," + std::to_string(j) + "," +
                       std::to_string(k) + ")"),
          i(i), j(j), k(k) {}
    int i, j, k;
};

class GradingViolation : public InvalidInput {
public:
    GradingViolation(int i, int j)
        : InvalidInput("GradingViolation(" + std::to_string(i) + "," + std::to_string(j) + ")"),
          i(i), j(j) {}
    int i, j;
};

class NotStratified : public InvalidInput {
public:
    explicit NotStratified(int layer)
        : InvalidInput("NotStratified(" + std::to_string(layer) + ")"), layer(layer) {}
    int layer;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ResourceLimit : public Error {
public:
    using Error::Error;
};

class AlgebraMismatch : public Error {
public:
    AlgebraMismatch() : Error("AlgebraMismatch") {}
};

class ZeroElement : public Error {
public:
    ZeroElement() : Error("ZeroElement") {}
};

class NoRealization : public Error {
public:
    NoRealization() : Error("NoRealization") {}
};

class DegreeOverflow : public Error {
public:
    using Error::Error;
};

class SpanMismatch : public Error {
public:
    using Error::Error;
};

class StarAdjointMismatch : public Error {
public:
    using Error::Error;
};

class UnsupportedGroup : public Error {
public:
    UnsupportedGroup() : Error("UnsupportedGroup") {}
    explicit UnsupportedGroup(const std::string& msg) : Error(msg) {}
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace rumin
