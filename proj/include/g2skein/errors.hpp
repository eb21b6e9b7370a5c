#pragma once

#include <stdexcept>
#include <string>

namespace g2skein {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Raised when a rational function in q has a denominator that vanishes at
/// the chosen root of unity.
class DenominatorVanishes : public Error {
public:
    explicit DenominatorVanishes(const std::string& what) : Error(what) {}
};

class ZeroPolynomial : public Error {
public:
    explicit ZeroPolynomial(const std::string& op) : Error(op + ": zero polynomial has no degree") {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class NotSymmetric : public Error {
public:
    NotSymmetric() : Error("polynomial is not symmetric under l1 <-> l2") {}
};

class NoACTerm : public Error {
public:
    NoACTerm() : Error("element has no a^i*c^j term") {}
};

class InvalidOrder : public Error {
public:
    explicit InvalidOrder(const std::string& what) : Error(what) {}
};

/// Arithmetic between scalars that live in different coefficient fields.
class FieldMismatch : public Error {
public:
    explicit FieldMismatch(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

} // namespace g2skein
