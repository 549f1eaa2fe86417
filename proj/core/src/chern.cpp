#include "cyctan/chern.hpp"

namespace cyctan {

NewtonRep truncate(const FundClass<DualFrac>& fc) {
    NewtonRep rep;
    rep.numerator = contract_eps(fc.component);
    rep.denominators.reserve(fc.complex.length());
    for (const auto& h : fc.complex.sequence) {
        const Frac& base = h.base;
        if (!base.is_polynomial())
            throw StructuralError(
                "truncate: the eps = 0 part of the sequence must be polynomial, got " +
                base.to_string());
        rep.denominators.push_back(base.as_poly());
    }
    return rep;
}

NewtonRep truncate(const FundClass<DualPoly>& fc) {
    NewtonRep rep;
    rep.numerator = to_frac_form(contract_eps(fc.component));
    rep.denominators.reserve(fc.complex.length());
    for (const auto& h : fc.complex.sequence) rep.denominators.push_back(h.base);
    return rep;
}

}  // namespace cyctan
