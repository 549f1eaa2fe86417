#include "cyctan/ideal.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>

#include "cyctan/errors.hpp"

namespace cyctan {

DivisionResult divide(const Poly& f, const std::vector<Poly>& divisors) {
    DivisionResult out;
    out.quotients.assign(divisors.size(), Poly(f.ring()));
    out.remainder = Poly(f.ring());
    Poly h = f;
    while (!h.is_zero()) {
        const Exps& le = h.leading_exps();
        const Rational& lc = h.leading_coeff();
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const Poly& d = divisors[i];
            if (d.is_zero()) continue;
            if (!mono_divides(d.leading_exps(), le)) continue;
            Poly t = Poly::monomial(f.ring(), mono_div(le, d.leading_exps()),
                                    lc / d.leading_coeff());
            out.quotients[i] += t;
            h -= t * d;
            reduced = true;
            break;
        }
        if (!reduced) {
            Poly lt = Poly::monomial(f.ring(), le, lc);
            out.remainder += lt;
            h -= lt;
        }
    }
    return out;
}

namespace {

std::size_t gb_limit_from_env() {
    if (const char* s = std::getenv("KOSZUL_GB_LIMIT")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(s, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 512;
}

struct Entry {
    Poly p;
    std::vector<Poly> rep;
};

void scale_rep(std::vector<Poly>& rep, const Rational& c) {
    for (auto& r : rep) r = r * c;
}

void axpy_rep(std::vector<Poly>& rep, const Poly& t, const std::vector<Poly>& other) {
    for (std::size_t j = 0; j < rep.size(); ++j) rep[j] -= t * other[j];
}

// Full normal form of h against the current basis, updating h's rep.
void reduce_entry(Entry& e, const std::vector<Entry>& basis) {
    Poly h = e.p;
    Poly r(h.ring());
    while (!h.is_zero()) {
        const Exps& le = h.leading_exps();
        bool reduced = false;
        for (const auto& b : basis) {
            if (b.p.is_zero()) continue;
            if (!mono_divides(b.p.leading_exps(), le)) continue;
            Poly t = Poly::monomial(h.ring(), mono_div(le, b.p.leading_exps()),
                                    h.leading_coeff() / b.p.leading_coeff());
            h -= t * b.p;
            axpy_rep(e.rep, t, b.rep);
            reduced = true;
            break;
        }
        if (!reduced) {
            Poly lt = Poly::monomial(h.ring(), le, h.leading_coeff());
            r += lt;
            h -= lt;
        }
    }
    e.p = r;
}

void make_monic(Entry& e) {
    if (e.p.is_zero()) return;
    Rational inv = Rational(1) / e.p.leading_coeff();
    e.p = e.p * inv;
    scale_rep(e.rep, inv);
}

}  // namespace

GroebnerBasis groebner(const RingPtr& ring, const std::vector<Poly>& generators,
                       std::size_t size_limit) {
    if (size_limit == 0) size_limit = gb_limit_from_env();

    std::vector<Entry> basis;
    for (std::size_t j = 0; j < generators.size(); ++j) {
        const Poly& g = generators[j];
        require_same_ring(ring, g.ring(), "groebner");
        if (g.is_zero()) continue;
        Entry e;
        e.p = g;
        e.rep.assign(generators.size(), Poly(ring));
        e.rep[j] = Poly(ring, Rational(1));
        make_monic(e);
        basis.push_back(std::move(e));
    }

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const Poly& fi = basis[i].p;
        const Poly& fj = basis[j].p;
        // product criterion: coprime leading monomials reduce to zero
        if (mono_coprime(fi.leading_exps(), fj.leading_exps())) continue;

        Exps l = mono_lcm(fi.leading_exps(), fj.leading_exps());
        Poly ti = Poly::monomial(ring, mono_div(l, fi.leading_exps()),
                                 Rational(1) / fi.leading_coeff());
        Poly tj = Poly::monomial(ring, mono_div(l, fj.leading_exps()),
                                 Rational(1) / fj.leading_coeff());
        Entry s;
        s.p = ti * fi - tj * fj;
        s.rep.assign(generators.size(), Poly(ring));
        for (std::size_t k = 0; k < generators.size(); ++k)
            s.rep[k] = ti * basis[i].rep[k] - tj * basis[j].rep[k];
        reduce_entry(s, basis);
        if (s.p.is_zero()) continue;
        make_monic(s);
        std::size_t n = basis.size();
        if (n + 1 > size_limit)
            throw ResourceLimitError(
                "Groebner basis size exceeded the limit of " + std::to_string(size_limit) +
                " elements (KOSZUL_GB_LIMIT)");
        for (std::size_t k = 0; k < n; ++k) pairs.emplace_back(k, n);
        basis.push_back(std::move(s));
    }

    // minimalize: drop elements whose leading monomial another one divides
    std::vector<Entry> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Exps& li = basis[i].p.leading_exps();
            const Exps& lj = basis[j].p.leading_exps();
            if (mono_divides(lj, li) && (li != lj || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // tail-reduce each element against the others
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Entry> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduce_entry(minimal[i], others);
        make_monic(minimal[i]);
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Entry& a, const Entry& b) {
        return mono_less(ring->order, a.p.leading_exps(), b.p.leading_exps());
    });

    GroebnerBasis out;
    for (auto& e : minimal) {
        out.elements.push_back(std::move(e.p));
        out.reps.push_back(std::move(e.rep));
    }
    return out;
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_) require_same_ring(ring_, g.ring(), "ideal");
}

const GroebnerBasis& Ideal::basis() const {
    std::call_once(cache_->once, [&] { cache_->gb = groebner(ring_, gens_); });
    return cache_->gb;
}

bool Ideal::is_zero_ideal() const { return basis().elements.empty(); }

bool Ideal::is_proper() const {
    const auto& b = basis().elements;
    return b.empty() || !b.front().is_constant();
}

bool Ideal::operator==(const Ideal& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    return basis().elements == o.basis().elements;  // reduced bases are unique
}

Membership ideal_member(const Poly& f, const Ideal& ideal, bool with_cofactors) {
    require_same_ring(f.ring(), ideal.ring(), "ideal_member");
    const GroebnerBasis& gb = ideal.basis();
    DivisionResult dr = divide(f, gb.elements);
    Membership m;
    m.in = dr.remainder.is_zero();
    m.remainder = std::move(dr.remainder);
    if (with_cofactors) {
        m.cofactors.assign(ideal.generators().size(), Poly(f.ring()));
        for (std::size_t k = 0; k < gb.elements.size(); ++k) {
            if (dr.quotients[k].is_zero()) continue;
            for (std::size_t j = 0; j < m.cofactors.size(); ++j)
                m.cofactors[j] += dr.quotients[k] * gb.reps[k][j];
        }
    }
    return m;
}

bool is_unit_mod(const Poly& f, const Ideal& ideal) {
    if (!ideal.is_proper())
        throw StructuralError("is_unit_mod: the unit ideal has no residue ring");
    Poly nf = divide(f, ideal.basis().elements).remainder;
    return nf.is_constant() && !nf.is_zero();
}

namespace {

// Lift a polynomial into the ring extended by a leading tag variable.
Poly lift_to_tagged(const RingPtr& tagged, const Poly& p) {
    Poly out(tagged);
    for (const auto& [e, c] : p.terms()) {
        Exps te(e.size() + 1, 0);
        std::copy(e.begin(), e.end(), te.begin() + 1);
        out.add_term(te, c);
    }
    return out;
}

// Drop the tag slot; valid only for tag-free monomials.
Poly drop_tag(const RingPtr& plain, const Poly& p) {
    Poly out(plain);
    for (const auto& [e, c] : p.terms()) out.add_term(Exps(e.begin() + 1, e.end()), c);
    return out;
}

}  // namespace

Ideal ideal_quotient(const Ideal& ideal, const Poly& f) {
    require_same_ring(f.ring(), ideal.ring(), "ideal_quotient");
    if (f.is_zero()) throw StructuralError("ideal quotient by zero");
    const RingPtr& ring = ideal.ring();

    if (ideal.is_zero_ideal()) return Ideal(ring, {});  // (0 : f) = 0 in a domain

    std::vector<std::string> tagged_vars;
    tagged_vars.reserve(ring->size() + 1);
    tagged_vars.push_back("#t");
    for (const auto& v : ring->vars) tagged_vars.push_back(v);
    RingPtr tagged = make_ring(std::move(tagged_vars), MonomialOrder::elim_first_var);

    Poly t = Poly::variable(tagged, 0);
    Poly one_minus_t = Poly(tagged, Rational(1)) - t;
    std::vector<Poly> gens;
    for (const auto& g : ideal.generators()) {
        if (g.is_zero()) continue;
        gens.push_back(t * lift_to_tagged(tagged, g));
    }
    gens.push_back(one_minus_t * lift_to_tagged(tagged, f));

    GroebnerBasis gb = groebner(tagged, gens);

    // elements free of the tag generate I ∩ (f); divide out f
    std::vector<Poly> quotient_gens;
    for (const auto& e : gb.elements) {
        bool tag_free = true;
        for (const auto& [exps, c] : e.terms())
            if (exps[0] != 0) {
                tag_free = false;
                break;
            }
        if (!tag_free) continue;
        Poly h = drop_tag(ring, e);
        DivisionResult dr = divide(h, {f});
        if (!dr.remainder.is_zero())
            throw StructuralError("internal: intersection element not divisible by f");
        quotient_gens.push_back(dr.quotients[0]);
    }
    return Ideal(ring, std::move(quotient_gens));
}

RegularityReport check_regular(const std::vector<Poly>& seq, RegularityOptions opts) {
    RegularityReport rep;
    if (seq.empty()) throw StructuralError("check_regular: empty sequence");
    const RingPtr& ring = seq.front().ring();

    bool gated = false;
    std::size_t gate_stage = 0;
    std::size_t terms_so_far = 0;

    for (std::size_t i = 0; i < seq.size(); ++i) {
        require_same_ring(ring, seq[i].ring(), "check_regular");
        std::ostringstream stage;
        stage << "stage " << (i + 1);
        if (seq[i].is_zero()) {
            rep.ok = false;
            rep.verified = true;
            rep.detail = stage.str() + ": entry is the zero polynomial";
            return rep;
        }
        terms_so_far += seq[i].num_terms();

        Ideal upto(ring, std::vector<Poly>(seq.begin(), seq.begin() + i + 1));
        if (!upto.is_proper()) {
            rep.ok = false;
            rep.verified = true;
            rep.detail = stage.str() + ": ideal (f_1,...,f_" + std::to_string(i + 1) +
                         ") is the unit ideal";
            return rep;
        }

        if (i == 0) continue;  // (0 : f_1) = 0 in a domain once f_1 != 0

        if (terms_so_far > opts.quotient_term_gate) {
            if (!gated) {
                gated = true;
                gate_stage = i + 1;
            }
            continue;
        }

        Ideal prev(ring, std::vector<Poly>(seq.begin(), seq.begin() + i));
        Ideal q = ideal_quotient(prev, seq[i]);
        if (!(q == prev)) {
            rep.ok = false;
            rep.verified = true;
            rep.detail = stage.str() + ": f_" + std::to_string(i + 1) +
                         " is a zerodivisor modulo (f_1,...,f_" + std::to_string(i) +
                         "); ideal quotient is strictly larger";
            return rep;
        }
    }

    rep.ok = true;
    rep.verified = !gated;
    rep.detail = gated ? "unverified: quotient computation skipped from stage " +
                             std::to_string(gate_stage) + " (size gate); proceeding"
                       : "regular sequence verified";
    return rep;
}

}  // namespace cyctan
