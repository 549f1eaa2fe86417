#include "cyctan/poly.hpp"

#include <algorithm>
#include <sstream>

#include "cyctan/errors.hpp"

namespace cyctan {

RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order) {
    if (vars.empty()) throw StructuralError("a polynomial ring needs at least one variable");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw StructuralError("duplicate variable name '" + vars[i] + "'");
    auto r = std::make_shared<PolyRing>();
    r->vars = std::move(vars);
    r->order = order;
    return r;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->order == b->order && a->vars == b->vars;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
    if (!same_ring(a, b))
        throw StructuralError(std::string(where) + ": operands live in different rings");
}

std::uint64_t mono_degree(const Exps& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

bool mono_less(MonomialOrder order, const Exps& a, const Exps& b) {
    std::size_t start = 0;
    if (order == MonomialOrder::elim_first_var) {
        if (a[0] != b[0]) return a[0] < b[0];
        start = 1;
    }
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = start; i < a.size(); ++i) da += a[i];
    for (std::size_t i = start; i < b.size(); ++i) db += b[i];
    if (da != db) return da < db;
    // grevlex tie-break: the rightmost differing exponent decides, larger
    // exponent there means smaller monomial
    for (std::size_t i = a.size(); i-- > start;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

bool mono_divides(const Exps& divisor, const Exps& dividend) {
    for (std::size_t i = 0; i < divisor.size(); ++i)
        if (divisor[i] > dividend[i]) return false;
    return true;
}

Exps mono_mul(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exps mono_div(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exps mono_lcm(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool mono_coprime(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

Poly::Poly(RingPtr ring) : ring_(std::move(ring)), terms_(TermCmp{ring_->order}) {}

Poly::Poly(RingPtr ring, const Rational& constant)
    : ring_(std::move(ring)), terms_(TermCmp{ring_->order}) {
    if (constant != 0) terms_.emplace(Exps(ring_->size(), 0), constant);
}

Poly Poly::variable(const RingPtr& ring, std::size_t index) {
    if (index >= ring->size()) throw StructuralError("variable index out of range");
    Exps e(ring->size(), 0);
    e[index] = 1;
    return monomial(ring, std::move(e), Rational(1));
}

Poly Poly::monomial(const RingPtr& ring, Exps exps, const Rational& coeff) {
    if (exps.size() != ring->size())
        throw StructuralError("exponent vector length does not match the ring");
    Poly p(ring);
    if (coeff != 0) p.terms_.emplace(std::move(exps), coeff);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0;
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw StructuralError("constant_value() on a non-constant polynomial");
    return terms_.begin()->second;
}

std::uint64_t Poly::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, mono_degree(e));
    return d;
}

const Exps& Poly::leading_exps() const {
    if (terms_.empty()) throw StructuralError("leading term of the zero polynomial");
    return terms_.begin()->first;
}

const Rational& Poly::leading_coeff() const {
    if (terms_.empty()) throw StructuralError("leading term of the zero polynomial");
    return terms_.begin()->second;
}

Poly Poly::derivative(std::size_t var_index) const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[var_index] == 0) continue;
        Exps de = e;
        de[var_index] -= 1;
        r.add_term(de, c * Rational(e[var_index]));
    }
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r(ring_, Rational(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

void Poly::add_term(const Exps& exps, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_ring(ring_, o.ring_, "poly add");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_ring(ring_, o.ring_, "poly sub");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_ring(a.ring_, b.ring_, "poly mul");
    Poly r(a.ring_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(mono_mul(ea, eb), ca * cb);
    return r;
}

Poly operator*(const Poly& a, const Rational& c) {
    Poly r(a.ring_);
    if (c == 0) return r;
    for (const auto& [e, k] : a.terms_) r.terms_.emplace(e, k * c);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->vars[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out << a.get_str();
        } else if (a == 1) {
            out << mono;
        } else {
            out << a.get_str() << "*" << mono;
        }
        first = false;
    }
    return out.str();
}

}  // namespace cyctan
