#pragma once

#include <gmpxx.h>

#include <string>

#include "cyctan/errors.hpp"

namespace cyctan {

/// Exact rational scalar. GMP keeps the canonical form we rely on:
/// gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;

inline Rational rational_from_parts(const std::string& num, const std::string& den) {
    mpz_class n(num), d(den);
    if (d == 0)
        throw StructuralError("rational with zero denominator: " + num + "/" + den);
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational rational_factorial(unsigned n) {
    mpz_class r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return Rational(r);
}

}  // namespace cyctan
