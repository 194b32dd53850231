#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mvmorse {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text. line() is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line = 0);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Empty complex, duplicate vertex in a simplex, copy-tag collision.
class ComplexError : public Error {
public:
    using Error::Error;
};

// A pair that is not a facet/coface pair, a simplex matched twice,
// or a simplex that does not belong to the complex.
class FieldError : public Error {
public:
    using Error::Error;
};

// The witness is a closed trajectory tau0, sigma1, tau1, ..., tau0 printed
// as simplex strings.
class NotAcyclicError : public Error {
public:
    NotAcyclicError(const std::string& msg, std::vector<std::string> witness);
    const std::vector<std::string>& witness() const { return witness_; }

private:
    std::vector<std::string> witness_;
};

class DecompositionError : public Error {
public:
    using Error::Error;
};

// An invariant that must hold for every valid input failed.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace mvmorse
