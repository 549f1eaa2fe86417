#include "cyctan/frac.hpp"

#include "cyctan/errors.hpp"

namespace cyctan {

Frac::Frac(Poly num) : num_(std::move(num)) {
    den_ = Poly(num_.ring(), Rational(1));
}

Frac::Frac(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_ring(num_.ring(), den_.ring(), "frac");
    if (den_.is_zero()) throw StructuralError("fraction with zero denominator");
    normalize();
}

void Frac::normalize() {
    if (num_.is_zero() || den_.is_constant()) {
        if (!den_.is_constant() || den_.constant_value() != 1) {
            if (!num_.is_zero()) num_ = num_ * (Rational(1) / den_.constant_value());
            den_ = Poly(num_.ring(), Rational(1));
        }
    }
}

bool Frac::is_polynomial() const {
    return den_.is_constant() && den_.constant_value() == 1;
}

const Poly& Frac::as_poly() const {
    if (!is_polynomial())
        throw StructuralError("fraction with denominator " + den_.to_string() +
                              " is not a polynomial");
    return num_;
}

Frac Frac::operator-() const {
    Frac r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Frac operator+(const Frac& a, const Frac& b) {
    if (a.den_ == b.den_) return Frac(a.num_ + b.num_, a.den_);
    return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Frac operator-(const Frac& a, const Frac& b) {
    if (a.den_ == b.den_) return Frac(a.num_ - b.num_, a.den_);
    return Frac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Frac operator*(const Frac& a, const Frac& b) {
    return Frac(a.num_ * b.num_, a.den_ * b.den_);
}

Frac operator*(const Frac& a, const Rational& c) {
    Frac r;
    r.num_ = a.num_ * c;
    r.den_ = a.den_;
    if (r.num_.is_zero()) r.den_ = Poly(a.ring(), Rational(1));
    return r;
}

bool Frac::operator==(const Frac& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::string Frac::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace cyctan
