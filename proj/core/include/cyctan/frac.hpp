#pragma once

#include <string>

#include "cyctan/poly.hpp"

namespace cyctan {

/// Formal fraction num/den of polynomials. Stored unreduced (no gcd
/// cancellation); equality is cross-multiplication. Constant denominators
/// are folded into the numerator so den == 1 exactly when the fraction is
/// polynomial. Whether den avoids a given prime is the consumer's check.
class Frac {
public:
    Frac() = default;
    explicit Frac(Poly num);
    Frac(Poly num, Poly den);

    static Frac zero(const RingPtr& ring) { return Frac(Poly(ring)); }
    static Frac one(const RingPtr& ring) { return Frac(Poly(ring, Rational(1))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const RingPtr& ring() const { return num_.ring(); }

    bool is_null() const { return num_.is_null(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    /// Numerator, provided is_polynomial(). Throws otherwise.
    const Poly& as_poly() const;

    Frac operator-() const;
    friend Frac operator+(const Frac& a, const Frac& b);
    friend Frac operator-(const Frac& a, const Frac& b);
    friend Frac operator*(const Frac& a, const Frac& b);
    friend Frac operator*(const Frac& a, const Rational& c);
    friend Frac operator*(const Rational& c, const Frac& a) { return a * c; }

    bool operator==(const Frac& o) const;  // cross-multiplication equality
    bool operator!=(const Frac& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void normalize();

    Poly num_, den_;
};

inline Frac to_frac(const Poly& p) { return Frac(p); }

}  // namespace cyctan
