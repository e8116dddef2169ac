#ifndef QHECKE_ERRORS_HPP
#define QHECKE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qhecke {

// Base class for all structured failures. Checks run by the CLI catch these
// and turn them into failed check reports with the message as witness.
struct Error : std::runtime_error {
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// exact_divide was asked to divide f by g with a nonzero remainder.  In a
// Demazure call site this signals an implementation bug, not bad user input.
struct NotDivisible : Error {
    explicit NotDivisible(const std::string &msg) : Error("NotDivisible: " + msg) {}
};

// Singular linear system; carries the rank found during elimination.
struct Singular : Error {
    int rank;
    Singular(int rank_, const std::string &msg)
        : Error("Singular: " + msg + " (rank " + std::to_string(rank_) + ")"), rank(rank_) {}
};

// A t-Laurent limit with positive leading exponent.
struct Diverges : Error {
    explicit Diverges(const std::string &msg) : Error("Diverges: " + msg) {}
};

// Resonant Sylvester step in the Frobenius recursion.
struct Resonant : Error {
    explicit Resonant(const std::string &msg) : Error("Resonant: " + msg) {}
};

struct UnsupportedType : Error {
    explicit UnsupportedType(const std::string &msg) : Error("UnsupportedType: " + msg) {}
};

struct GroupTooLarge : Error {
    explicit GroupTooLarge(const std::string &msg) : Error("GroupTooLarge: " + msg) {}
};

struct NotInvariant : Error {
    explicit NotInvariant(const std::string &msg) : Error("NotInvariant: " + msg) {}
};

} // namespace qhecke

#endif
