#pragma once

#include <stdexcept>
#include <string>

namespace octjordan {

/// Text-grammar parse failure; the message names the offending token.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The input triple has a vanishing associator (x2, y3 or z8 is zero),
/// so no eigenvalue lambda = [v] != 0 exists for it.
class DegenerateVector : public std::domain_error {
public:
    explicit DegenerateVector(const std::string& msg) : std::domain_error(msg) {}
};

/// Canonicalization failed because the triple lies (numerically) in a
/// quaternionic subalgebra, i.e. its associator is zero within tolerance.
class QuaternionicInput : public std::domain_error {
public:
    explicit QuaternionicInput(const std::string& msg) : std::domain_error(msg) {}
};

} // namespace octjordan
