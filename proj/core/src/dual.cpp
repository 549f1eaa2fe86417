#include "cyctan/dual.hpp"

#include "cyctan/errors.hpp"

namespace cyctan {

DualPoly parse_dual(const RingPtr& ring, std::string_view text) {
    std::vector<std::string> vars = ring->vars;
    for (const auto& v : vars)
        if (v == "eps") throw StructuralError("ring already declares a variable named 'eps'");
    vars.push_back("eps");
    RingPtr extended = make_ring(std::move(vars), ring->order);

    Poly combined = parse_poly(extended, text);
    std::size_t eps_slot = ring->size();

    Poly base(ring), eps(ring);
    for (const auto& [e, c] : combined.terms()) {
        Exps plain(e.begin(), e.begin() + eps_slot);
        if (e[eps_slot] == 0)
            base.add_term(plain, c);
        else if (e[eps_slot] == 1)
            eps.add_term(plain, c);
        // eps^2 = 0: higher powers vanish
    }
    return DualPoly(std::move(base), std::move(eps));
}

}  // namespace cyctan
