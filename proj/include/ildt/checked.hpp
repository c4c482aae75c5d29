#pragma once

#include <cstdint>
#include <string>

#include "ildt/error.hpp"

namespace ildt {

// Overflow-checked signed 64-bit arithmetic. Counts in this library grow like
// 3^t and 4^t, so silent wraparound would corrupt results long before memory
// becomes a problem; every formula evaluation goes through these helpers.

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

inline int64_t checked_pow(int64_t base, uint32_t exp) {
    int64_t r = 1;
    for (uint32_t i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

}  // namespace ildt
