#pragma once

#include <cstdint>

#include "qsfill/errors.hpp"

namespace qsfill::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

}  // namespace qsfill::checked
