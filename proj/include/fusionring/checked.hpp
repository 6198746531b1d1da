#pragma once

#include <cstdint>

#include "fusionring/error.hpp"

namespace fusionring {

using Coeff = std::int64_t;

inline Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowDetected();
    return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowDetected();
    return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowDetected();
    return r;
}

} // namespace fusionring
