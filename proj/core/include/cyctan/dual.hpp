#pragma once

#include <string>
#include <string_view>

#include "cyctan/frac.hpp"
#include "cyctan/poly.hpp"

namespace cyctan {

/// base + eps*eps_part with eps^2 = 0. Multiplication never produces an
/// eps^2 slot, so nilpotency holds by construction.
template <class C>
struct Dual {
    C base;
    C eps;

    Dual() = default;
    Dual(C b, C e) : base(std::move(b)), eps(std::move(e)) {}

    static Dual embed(C b) {
        C zero = b * Rational(0);
        return Dual(std::move(b), std::move(zero));
    }

    const RingPtr& ring() const { return base.ring(); }
    bool is_zero() const { return base.is_zero() && eps.is_zero(); }

    Dual operator-() const { return Dual(-base, -eps); }

    friend Dual operator+(const Dual& a, const Dual& b) {
        return Dual(a.base + b.base, a.eps + b.eps);
    }
    friend Dual operator-(const Dual& a, const Dual& b) {
        return Dual(a.base - b.base, a.eps - b.eps);
    }
    friend Dual operator*(const Dual& a, const Dual& b) {
        return Dual(a.base * b.base, a.base * b.eps + a.eps * b.base);
    }
    friend Dual operator*(const Dual& a, const Rational& c) {
        return Dual(a.base * c, a.eps * c);
    }
    friend Dual operator*(const Rational& c, const Dual& a) { return a * c; }

    bool operator==(const Dual& o) const { return base == o.base && eps == o.eps; }
    bool operator!=(const Dual& o) const { return !(*this == o); }

    std::string to_string() const {
        if (eps.is_zero()) return base.to_string();
        std::string e = "eps*(" + eps.to_string() + ")";
        if (base.is_zero()) return e;
        return base.to_string() + " + " + e;
    }
};

using DualPoly = Dual<Poly>;
using DualFrac = Dual<Frac>;

template <class C>
C set_eps_zero(const Dual<C>& v) {
    return v.base;
}

inline DualFrac to_dual_frac(const DualPoly& v) {
    return DualFrac(Frac(v.base), Frac(v.eps));
}

/// Parses "P + eps*(Q)" (either part optional); eps^k with k >= 2 is
/// dropped, matching eps^2 = 0.
DualPoly parse_dual(const RingPtr& ring, std::string_view text);

template <class T>
inline constexpr bool is_dual_v = false;
template <class C>
inline constexpr bool is_dual_v<Dual<C>> = true;

}  // namespace cyctan
