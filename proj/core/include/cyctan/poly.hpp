#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cyctan/rational.hpp"

namespace cyctan {

/// Exponent vector; one slot per ring variable.
using Exps = std::vector<std::uint32_t>;

/// Monomial orders understood by the term comparator. All public
/// computation uses grevlex; elim_first_var is a block order (power of the
/// first variable dominates, grevlex on the rest) used internally for
/// elimination.
enum class MonomialOrder : std::uint8_t { grevlex, elim_first_var };

struct PolyRing {
    std::vector<std::string> vars;
    MonomialOrder order = MonomialOrder::grevlex;

    std::size_t size() const { return vars.size(); }
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars,
                  MonomialOrder order = MonomialOrder::grevlex);

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

/// Strict "a < b" in the ring's monomial order.
bool mono_less(MonomialOrder order, const Exps& a, const Exps& b);

std::uint64_t mono_degree(const Exps& e);
bool mono_divides(const Exps& divisor, const Exps& dividend);
Exps mono_mul(const Exps& a, const Exps& b);
Exps mono_div(const Exps& a, const Exps& b);  // assumes divisibility
Exps mono_lcm(const Exps& a, const Exps& b);
bool mono_coprime(const Exps& a, const Exps& b);

/// Map comparator: descending in the monomial order, so begin() is the
/// leading term.
struct TermCmp {
    MonomialOrder order = MonomialOrder::grevlex;
    bool operator()(const Exps& a, const Exps& b) const { return mono_less(order, b, a); }
};

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed, shared variable list. No stored coefficient is zero.
class Poly {
public:
    using TermMap = std::map<Exps, Rational, TermCmp>;

    Poly() = default;  // null (no ring); only containers should see this
    explicit Poly(RingPtr ring);
    Poly(RingPtr ring, const Rational& constant);

    static Poly variable(const RingPtr& ring, std::size_t index);
    static Poly monomial(const RingPtr& ring, Exps exps, const Rational& coeff);

    const RingPtr& ring() const { return ring_; }
    bool is_null() const { return ring_ == nullptr; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term value; zero polynomial yields 0.
    Rational constant_value() const;

    std::size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    std::uint64_t total_degree() const;  // 0 for the zero polynomial

    const Exps& leading_exps() const;
    const Rational& leading_coeff() const;

    Poly derivative(std::size_t var_index) const;
    Poly pow(unsigned e) const;

    void add_term(const Exps& exps, const Rational& coeff);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Rational& c);
    friend Poly operator*(const Rational& c, const Poly& a) { return a * c; }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    RingPtr ring_;
    TermMap terms_;
};

/// Parses the polynomial text grammar: rational coefficients, declared
/// variable names, operators + - * ^, parentheses; whitespace insignificant.
/// Example: "x1^2*x2 - 3/2*x3". Throws ParseError with a byte offset.
Poly parse_poly(const RingPtr& ring, std::string_view text);

}  // namespace cyctan
