#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfl {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed formula, set expression, number or file line.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error("syntax error at offset " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A formula has more atoms than the configured table or symbolic cap.
class CapExceeded : public Error {
public:
    CapExceeded(std::size_t atoms, std::size_t cap)
        : Error("formula has " + std::to_string(atoms) + " atoms, cap is " + std::to_string(cap)),
          atoms_(atoms), cap_(cap) {}

    std::size_t atoms() const noexcept { return atoms_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t atoms_;
    std::size_t cap_;
};

// A name could not be resolved: unassigned atom, unbound set variable,
// unknown element or universe, duplicate definition, universe mismatch.
class BindingError : public Error {
public:
    using Error::Error;
};

// A weight outside [0, 1].
class RangeError : public Error {
public:
    using Error::Error;
};

// Projection of a graded (non 0/1) fuzzy set onto a classical set.
class NotCrisp : public Error {
public:
    using Error::Error;
};

// Argument outside an operation's documented domain.
class ArgumentError : public Error {
public:
    using Error::Error;
};

}  // namespace cfl
