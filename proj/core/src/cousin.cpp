#include "cyctan/cousin.hpp"

#include <sstream>

#include "cyctan/koszul.hpp"

namespace cyctan {

std::string to_string(BoundaryCase c) {
    switch (c) {
        case BoundaryCase::unit_denominator: return "unit_denominator";
        case BoundaryCase::rewritten: return "rewritten";
        case BoundaryCase::direct: return "direct";
    }
    return "?";
}

namespace {

// The common fraction denominator of the numerator, or the unit polynomial
// when every coefficient is polynomial. Distinct denominators are refused:
// split by linearity first.
Poly common_denominator(const LocalCohClass& c) {
    Poly b(c.ring(), Rational(1));
    bool found = false;
    for (const auto& [slots, coeff] : c.numerator().terms()) {
        if (coeff.is_polynomial()) continue;
        if (!found) {
            b = coeff.den();
            found = true;
        } else if (!(b == coeff.den())) {
            throw UnsupportedCaseError(
                "numerator mixes fraction denominators " + b.to_string() + " and " +
                coeff.den().to_string() + "; split by linearity first");
        }
    }
    return b;
}

std::string render_decomposition(const std::vector<Poly>& cofactors,
                                 const std::vector<Poly>& gens, const Poly& remainder) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < cofactors.size(); ++i) {
        if (cofactors[i].is_zero()) continue;
        if (!first) out << " + ";
        out << "(" << cofactors[i].to_string() << ")*(" << gens[i].to_string() << ")";
        first = false;
    }
    if (!remainder.is_zero()) {
        if (!first) out << " + ";
        out << remainder.to_string();
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace

RewriteResult rewrite_denominator(const LocalCohClass& c, const Poly& extension) {
    require_same_ring(c.ring(), extension.ring(), "rewrite_denominator");
    const auto& dens = c.denominators();

    Poly b = common_denominator(c);
    if (b.is_constant()) {
        // polynomial coefficients need no rewriting
        return RewriteResult{c, BoundaryCase::direct, {}, Poly(c.ring())};
    }

    Ideal p_ideal(c.ring(), dens);
    if (ideal_member(b, p_ideal, false).in)
        throw LocalizationError("denominator " + b.to_string() +
                                " lies in the prime (f_1,...,f_p); the class is not "
                                "localized correctly");

    std::vector<Poly> extended = dens;
    extended.push_back(extension);
    Ideal full(c.ring(), extended);

    Membership m = ideal_member(b, full, true);
    if (!m.in) {
        if (m.remainder.is_constant() && !m.remainder.is_zero()) {
            // b is a unit modulo the full ideal; keep a/b as is
            return RewriteResult{c, BoundaryCase::unit_denominator, std::move(m.cofactors),
                                 std::move(m.remainder)};
        }
        throw UnsupportedCaseError(
            "denominator " + b.to_string() +
                " is neither in the extended ideal nor certifiably a unit modulo it",
            "normal form: " + m.remainder.to_string());
    }

    const Poly& u = m.cofactors.back();
    if (!u.is_constant() || u.is_zero()) {
        throw UnsupportedCaseError(
            "decomposition of " + b.to_string() +
                " needs a nonzero constant cofactor on " + extension.to_string() +
                " (the supported case has n = 1 and a unit there)",
            b.to_string() + " = " + render_decomposition(m.cofactors, extended, m.remainder));
    }
    Rational unit = u.constant_value();

    // 1/b - 1/(u f_{p+1}) has numerator in (f_1..f_p), which dies against
    // A_p; replace a/b by (a/u)/f_{p+1}.
    FracForm rewritten(c.ring(), c.numerator().degree());
    for (const auto& [slots, coeff] : c.numerator().terms()) {
        if (coeff.is_polynomial())
            rewritten.add_term(slots, coeff);
        else
            rewritten.add_term(slots,
                               Frac(coeff.num() * (Rational(1) / unit), extension));
    }
    return RewriteResult{c.with_numerator(std::move(rewritten)), BoundaryCase::rewritten,
                         std::move(m.cofactors), std::move(m.remainder)};
}

BoundaryResult boundary(const LocalCohClass& c, const Poly& extension,
                        const std::string& w_label) {
    require_same_ring(c.ring(), extension.ring(), "boundary");
    if (extension.is_zero()) throw StructuralError("boundary: zero extension");

    std::vector<Poly> extended = c.denominators();
    extended.push_back(extension);
    const int q = c.numerator().degree();

    Poly b = common_denominator(c);
    if (b.is_constant()) {
        // polynomial numerator: the class extends by a factor f_{p+1}
        FracForm out = c.numerator().scale(Frac(extension));
        return BoundaryResult{c, extension,
                              LocalCohClass(w_label, std::move(extended), std::move(out)),
                              BoundaryCase::direct};
    }

    RewriteResult rw = rewrite_denominator(c, extension);
    if (rw.tag == BoundaryCase::unit_denominator) {
        // numerator gains a factor f_{p+1}, which appears in A_{p+1}
        return BoundaryResult{c, extension,
                              LocalCohClass::zero(w_label, std::move(extended), c.ring(), q),
                              BoundaryCase::unit_denominator};
    }

    // rewritten: coefficients are now a'/f_{p+1}; strip the 1/f_{p+1}
    FracForm out(c.ring(), q);
    for (const auto& [slots, coeff] : rw.cls.numerator().terms()) {
        if (coeff.is_polynomial()) {
            // part of the numerator with no pole along f_{p+1}: it picks up
            // the factor f_{p+1} instead and dies in the quotient, so only
            // its f_{p+1}-multiple survives formally
            out.add_term(slots, Frac(coeff.as_poly() * extension));
        } else {
            out.add_term(slots, Frac(coeff.num()));
        }
    }
    return BoundaryResult{c, extension,
                          LocalCohClass(w_label, std::move(extended), std::move(out)),
                          BoundaryCase::rewritten};
}

std::vector<LocalCohClass> split_by_denominator(const LocalCohClass& c) {
    std::map<std::string, FracForm> groups;
    for (const auto& [slots, coeff] : c.numerator().terms()) {
        std::string key = coeff.is_polynomial() ? std::string("1") : coeff.den().to_string();
        auto it = groups.find(key);
        if (it == groups.end()) {
            FracForm f(c.ring(), c.numerator().degree());
            f.add_term(slots, coeff);
            groups.emplace(key, std::move(f));
        } else {
            it->second.add_term(slots, coeff);
        }
    }
    std::vector<LocalCohClass> out;
    for (auto& [key, form] : groups) out.push_back(c.with_numerator(std::move(form)));
    if (out.empty()) out.push_back(c);
    return out;
}

LocalCohClass boundary_of_sum(const FormalSum& sum,
                              const std::map<std::string, Poly>& extension_by_point,
                              const std::string& w_label) {
    if (sum.empty()) throw StructuralError("boundary_of_sum: empty sum");

    std::vector<BoundaryResult> results;
    for (const auto& part : sum.parts()) {
        auto it = extension_by_point.find(part.point());
        if (it == extension_by_point.end())
            throw StructuralError("boundary_of_sum: no extension supplied for point '" +
                                  part.point() + "'");
        results.push_back(boundary(part, it->second, w_label));
    }

    const std::vector<Poly>& reference = results.front().output.denominators();
    LocalCohClass acc = results.front().output;
    for (std::size_t i = 1; i < results.size(); ++i) {
        const auto& dens = results[i].output.denominators();
        std::vector<std::size_t> perm;
        try {
            perm = match_permutation(reference, dens);
        } catch (const StructuralError&) {
            throw StructuralError(
                "boundary_of_sum: boundaries land at different points (denominator "
                "sequences are not permutations of each other)");
        }
        // dens[k] == reference[perm[k]]; realigning onto the reference takes
        // the inverse permutation
        std::vector<std::size_t> onto(perm.size());
        for (std::size_t k = 0; k < perm.size(); ++k) onto[perm[k]] = k;
        LocalCohClass aligned = permute_denominators(results[i].output, onto);
        acc = add_classes(acc, aligned);
    }
    return acc;
}

}  // namespace cyctan
