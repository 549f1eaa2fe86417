#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "cyctan/dual.hpp"
#include "cyctan/frac.hpp"
#include "cyctan/poly.hpp"

namespace cyctan {

/// Wedge monomial: strictly increasing variable indices. For dual
/// coefficients one extra slot (index = number of variables) stands for
/// d(eps); it is the last generator in the slot order.
using Slots = std::vector<std::uint32_t>;

template <class C>
C ring_zero(const RingPtr& ring) {
    if constexpr (std::is_same_v<C, Poly>) {
        return Poly(ring);
    } else if constexpr (std::is_same_v<C, Frac>) {
        return Frac(Poly(ring));
    } else {
        static_assert(is_dual_v<C>, "unsupported coefficient type");
        using B = decltype(C{}.base);
        return C(ring_zero<B>(ring), ring_zero<B>(ring));
    }
}

template <class C>
C ring_one(const RingPtr& ring) {
    if constexpr (std::is_same_v<C, Poly>) {
        return Poly(ring, Rational(1));
    } else if constexpr (std::is_same_v<C, Frac>) {
        return Frac(Poly(ring, Rational(1)));
    } else {
        static_assert(is_dual_v<C>, "unsupported coefficient type");
        using B = decltype(C{}.base);
        return C(ring_one<B>(ring), ring_zero<B>(ring));
    }
}

/// Exterior form of a fixed degree with coefficients in C (Poly, Frac or a
/// Dual of those). Canonical antisymmetric storage: index tuples strictly
/// increasing and no zero coefficients.
template <class C>
class DiffForm {
public:
    DiffForm() : degree_(0) {}
    DiffForm(RingPtr ring, int degree) : ring_(std::move(ring)), degree_(degree) {
        if (degree_ < 0) throw StructuralError("negative form degree");
    }

    static DiffForm coefficient(const C& value) {
        DiffForm f(value.ring(), 0);
        f.add_term({}, value);
        return f;
    }

    /// c * dx_slot (or c * deps for the eps slot).
    static DiffForm generator(const RingPtr& ring, std::uint32_t slot, const C& coeff) {
        DiffForm f(ring, 1);
        f.add_term({slot}, coeff);
        return f;
    }

    const RingPtr& ring() const { return ring_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Slots, C>& terms() const { return terms_; }

    std::uint32_t eps_slot() const { return static_cast<std::uint32_t>(ring_->size()); }

    void add_term(Slots slots, const C& coeff) {
        if (static_cast<int>(slots.size()) != degree_)
            throw StructuralError("wedge monomial length does not match form degree");
        std::uint32_t max_slot = eps_slot();
        if constexpr (!is_dual_v<C>) max_slot -= 1;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (slots[i] > max_slot) throw StructuralError("wedge slot out of range");
            if (i + 1 < slots.size() && slots[i] >= slots[i + 1])
                throw StructuralError("wedge monomial indices must strictly increase");
        }
        if (coeff.is_zero()) return;
        auto it = terms_.find(slots);
        if (it == terms_.end()) {
            terms_.emplace(std::move(slots), coeff);
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    DiffForm operator-() const {
        DiffForm r(ring_, degree_);
        for (const auto& [s, c] : terms_) r.terms_.emplace(s, -c);
        return r;
    }

    friend DiffForm operator+(const DiffForm& a, const DiffForm& b) {
        if (a.ring_ == nullptr || a.is_zero()) return b;  // zero adapts its degree
        if (b.ring_ == nullptr || b.is_zero()) return a;
        require_same_ring(a.ring_, b.ring_, "form add");
        if (a.degree_ != b.degree_) throw StructuralError("adding forms of different degrees");
        DiffForm r = a;
        for (const auto& [s, c] : b.terms_) r.add_term(s, c);
        return r;
    }
    friend DiffForm operator-(const DiffForm& a, const DiffForm& b) { return a + (-b); }

    /// Wedge product.
    friend DiffForm operator*(const DiffForm& a, const DiffForm& b) {
        require_same_ring(a.ring_, b.ring_, "wedge");
        DiffForm r(a.ring_, a.degree_ + b.degree_);
        for (const auto& [sa, ca] : a.terms_)
            for (const auto& [sb, cb] : b.terms_) {
                int sign = 0;
                Slots merged = merge_slots(sa, sb, sign);
                if (sign == 0) continue;
                C coeff = ca * cb;
                if (sign < 0) coeff = -coeff;
                r.add_term(std::move(merged), coeff);
            }
        return r;
    }

    DiffForm scale(const C& c) const {
        DiffForm r(ring_, degree_);
        for (const auto& [s, k] : terms_) r.add_term(s, k * c);
        return r;
    }
    DiffForm scale(const Rational& c) const {
        DiffForm r(ring_, degree_);
        if (c == 0) return r;
        for (const auto& [s, k] : terms_) r.terms_.emplace(s, k * c);
        return r;
    }

    bool operator==(const DiffForm& o) const {
        if (!same_ring(ring_, o.ring_)) return false;
        if (is_zero() && o.is_zero()) return true;
        return degree_ == o.degree_ && terms_ == o.terms_;
    }
    bool operator!=(const DiffForm& o) const { return !(*this == o); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [s, c] : terms_) {
            if (!out.empty()) out += " + ";
            std::string wedge;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i) wedge += "^";
                wedge += s[i] == eps_slot() ? "deps" : "d" + ring_->vars[s[i]];
            }
            std::string coeff = c.to_string();
            if (wedge.empty())
                out += coeff;
            else if (coeff == "1")
                out += wedge;
            else if (coeff == "-1")
                out += "-" + wedge;
            else if (coeff.find_first_of("+-") != std::string::npos && coeff[0] != '(')
                out += "(" + coeff + ") * " + wedge;
            else
                out += coeff + " * " + wedge;
        }
        return out;
    }

private:
    // Merge two increasing tuples; sign = (-1)^inversions, 0 on a repeat.
    static Slots merge_slots(const Slots& a, const Slots& b, int& sign) {
        Slots m;
        m.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        int inversions = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) {
                sign = 0;
                return {};
            }
            if (a[i] < b[j]) {
                m.push_back(a[i++]);
            } else {
                inversions += static_cast<int>(a.size() - i);
                m.push_back(b[j++]);
            }
        }
        while (i < a.size()) m.push_back(a[i++]);
        while (j < b.size()) m.push_back(b[j++]);
        sign = (inversions % 2 == 0) ? 1 : -1;
        return m;
    }

    RingPtr ring_;
    int degree_;
    std::map<Slots, C> terms_;
};

inline DiffForm<Poly> d(const Poly& f) {
    DiffForm<Poly> r(f.ring(), 1);
    for (std::size_t i = 0; i < f.ring()->size(); ++i)
        r.add_term({static_cast<std::uint32_t>(i)}, f.derivative(i));
    return r;
}

/// Quotient rule: d(a/b) = (b da - a db) / b^2.
inline DiffForm<Frac> d(const Frac& f) {
    const RingPtr& ring = f.ring();
    DiffForm<Frac> r(ring, 1);
    Poly b2 = f.den() * f.den();
    for (std::size_t i = 0; i < ring->size(); ++i) {
        Poly num = f.den() * f.num().derivative(i) - f.num() * f.den().derivative(i);
        r.add_term({static_cast<std::uint32_t>(i)}, Frac(num, b2));
    }
    return r;
}

/// d(a + eps b) = da + eps db + b deps.
template <class C>
DiffForm<Dual<C>> d(const Dual<C>& v) {
    const RingPtr& ring = v.ring();
    DiffForm<Dual<C>> r(ring, 1);
    DiffForm<C> da = d(v.base), db = d(v.eps);
    for (std::size_t i = 0; i < ring->size(); ++i) {
        Slots s{static_cast<std::uint32_t>(i)};
        C zero = ring_zero<C>(ring);
        C ai = zero, bi = zero;
        if (auto it = da.terms().find(s); it != da.terms().end()) ai = it->second;
        if (auto it = db.terms().find(s); it != db.terms().end()) bi = it->second;
        r.add_term(s, Dual<C>(ai, bi));
    }
    r.add_term({static_cast<std::uint32_t>(ring->size())}, Dual<C>(v.eps, ring_zero<C>(ring)));
    return r;
}

/// Exterior derivative, termwise d(c) wedge dx_S.
template <class C>
DiffForm<C> d(const DiffForm<C>& w) {
    DiffForm<C> r(w.ring(), w.degree() + 1);
    for (const auto& [s, c] : w.terms()) {
        DiffForm<C> tail(w.ring(), w.degree());
        tail.add_term(s, ring_one<C>(w.ring()));
        r = r + d(c) * tail;
    }
    return r;
}

template <class C>
DiffForm<C> wedge(const DiffForm<C>& a, const DiffForm<C>& b) {
    return a * b;
}

/// Interior product with d/d(eps) followed by eps = 0. The deps slot is
/// removed with the Koszul sign of its (1-indexed) position; terms without
/// deps are sent to zero.
template <class C>
DiffForm<C> contract_eps(const DiffForm<Dual<C>>& w) {
    const RingPtr& ring = w.ring();
    std::uint32_t eps = static_cast<std::uint32_t>(ring->size());
    DiffForm<C> r(ring, w.degree() > 0 ? w.degree() - 1 : 0);
    for (const auto& [s, c] : w.terms()) {
        if (s.empty() || s.back() != eps) continue;  // deps is always last when present
        Slots rest(s.begin(), s.end() - 1);
        C base = set_eps_zero(c);
        if ((s.size() - 1) % 2 == 1) base = -base;  // sign (-1)^(position-1)
        r.add_term(std::move(rest), base);
    }
    return r;
}

template <class C, class F>
auto map_coefficients(const DiffForm<C>& w, F f) -> DiffForm<decltype(f(std::declval<C>()))> {
    using R = decltype(f(std::declval<C>()));
    DiffForm<R> r(w.ring(), w.degree());
    for (const auto& [s, c] : w.terms()) r.add_term(s, f(c));
    return r;
}

inline DiffForm<Frac> to_frac_form(const DiffForm<Poly>& w) {
    return map_coefficients(w, [](const Poly& p) { return Frac(p); });
}

}  // namespace cyctan
