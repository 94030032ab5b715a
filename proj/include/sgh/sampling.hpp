#pragma once

#include <random>

#include "sgh/gasket.hpp"

namespace sgh {

/// Uniform random rational with |numerator| <= max_num and
/// 1 <= denominator <= max_den.
inline Rational random_rational(std::mt19937_64& rng, long max_num = 100, long max_den = 100) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    const long n = num(rng);
    return Rational(n, den(rng));
}

inline BoundaryValues random_triple(std::mt19937_64& rng, long max_num = 100, long max_den = 100) {
    Rational a = random_rational(rng, max_num, max_den);
    Rational b = random_rational(rng, max_num, max_den);
    Rational c = random_rational(rng, max_num, max_den);
    return {std::move(a), std::move(b), std::move(c)};
}

inline BoundaryValues random_nonconstant_triple(std::mt19937_64& rng, long max_num = 100, long max_den = 100) {
    for (;;) {
        auto bv = random_triple(rng, max_num, max_den);
        if (!bv.is_constant()) return bv;
    }
}

}  // namespace sgh
