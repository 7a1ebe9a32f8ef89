#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uval {

// Base of every error thrown by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular") {}
};

class NotSymmetric : public Error {
public:
    NotSymmetric() : Error("matrix is not symmetric") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& expected)
        : Error("parse error at position " + std::to_string(position) + ": expected " + expected),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A computed dimension disagrees with the known basis of the algebra.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class AlgebraMismatch : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class DegreeOutOfRange : public Error {
public:
    using Error::Error;
};

// A matrix identity that must hold structurally (block shape, companion form) failed.
class StructureViolation : public Error {
public:
    using Error::Error;
};

}  // namespace uval
