#pragma once

#include <stdexcept>
#include <string>

namespace qsfill {

// Input outside the mathematical domain of an operation (bad fraction,
// unknown residue class, illegal rewrite, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Fixed-width arithmetic would have overflowed.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

}  // namespace qsfill
