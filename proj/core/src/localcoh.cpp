#include "cyctan/localcoh.hpp"

#include <sstream>

#include "cyctan/koszul.hpp"

namespace cyctan {

LocalCohClass::LocalCohClass(std::string point, std::vector<Poly> denominators,
                             FracForm numerator, std::optional<Ideal> localized_at)
    : point_(std::move(point)),
      denoms_(std::move(denominators)),
      num_(std::move(numerator)),
      localized_(std::move(localized_at)) {
    if (num_.ring() == nullptr) throw StructuralError("local cohomology class needs a ring");
    for (const auto& f : denoms_) {
        require_same_ring(num_.ring(), f.ring(), "local cohomology class");
        if (f.is_zero())
            throw StructuralError("denominator sequence contains the zero polynomial");
    }
    if (localized_) {
        for (const auto& [slots, coeff] : num_.terms()) {
            if (coeff.is_polynomial()) continue;
            if (ideal_member(coeff.den(), *localized_, false).in)
                throw LocalizationError("denominator " + coeff.den().to_string() +
                                        " lies in the localization prime");
        }
    }
}

LocalCohClass LocalCohClass::zero(std::string point, std::vector<Poly> denominators,
                                  const RingPtr& ring, int degree) {
    return LocalCohClass(std::move(point), std::move(denominators), FracForm(ring, degree));
}

LocalCohClass LocalCohClass::with_numerator(FracForm n) const {
    return LocalCohClass(point_, denoms_, std::move(n), localized_);
}

std::string LocalCohClass::to_string() const {
    std::ostringstream out;
    out << "[ " << num_.to_string() << " | ";
    for (std::size_t i = 0; i < denoms_.size(); ++i) {
        if (i) out << ", ";
        out << denoms_[i].to_string();
    }
    out << " ] @ " << point_;
    return out.str();
}

bool class_is_zero(const LocalCohClass& c) {
    Ideal ideal(c.ring(), c.denominators());
    for (const auto& [slots, coeff] : c.numerator().terms()) {
        if (!coeff.is_polynomial()) {
            std::string where = slots.empty() ? std::string("the degree-0 slot")
                                              : "coefficient of ";
            if (!slots.empty()) {
                for (std::size_t i = 0; i < slots.size(); ++i) {
                    if (i) where += "^";
                    where += "d" + c.ring()->vars[slots[i]];
                }
            }
            throw StructuralError(
                "class_is_zero needs polynomial coefficients; " + where +
                " is the fraction " + coeff.to_string() +
                " (clear it with rewrite_denominator first)");
        }
        if (!ideal_member(coeff.as_poly(), ideal, false).in) return false;
    }
    return true;
}

bool class_is_zero_at_power(const LocalCohClass& c, unsigned n) {
    if (n == 0) throw StructuralError("denominator power must be positive");
    if (n == 1) return class_is_zero(c);
    const RingPtr& ring = c.ring();
    Poly shift(ring, Rational(1));
    std::vector<Poly> powered;
    for (const auto& f : c.denominators()) {
        powered.push_back(f.pow(n));
        shift = shift * f.pow(n - 1);
    }
    Ideal ideal(ring, powered);
    for (const auto& [slots, coeff] : c.numerator().terms()) {
        if (!coeff.is_polynomial())
            throw StructuralError("class_is_zero_at_power needs polynomial coefficients");
        if (!ideal_member(coeff.as_poly() * shift, ideal, false).in) return false;
    }
    return true;
}

bool class_equal(const LocalCohClass& a, const LocalCohClass& b) {
    if (a.point() != b.point())
        throw StructuralError("class_equal: classes live at different points");
    if (a.denominators() != b.denominators())
        throw StructuralError(
            "class_equal: denominator sequences differ (permute or rewrite first)");
    return class_is_zero(a.with_numerator(a.numerator() - b.numerator()));
}

LocalCohClass negate(const LocalCohClass& c) { return c.with_numerator(-c.numerator()); }

LocalCohClass add_classes(const LocalCohClass& a, const LocalCohClass& b) {
    if (a.point() != b.point() || a.denominators() != b.denominators())
        throw StructuralError(
            "add_classes: point or denominators differ; use FormalSum for direct sums");
    return a.with_numerator(a.numerator() + b.numerator());
}

LocalCohClass permute_denominators(const LocalCohClass& c,
                                   const std::vector<std::size_t>& perm) {
    const auto& dens = c.denominators();
    if (perm.size() != dens.size()) throw StructuralError("permutation length mismatch");
    std::vector<bool> seen(perm.size(), false);
    std::vector<Poly> permuted;
    permuted.reserve(perm.size());
    for (auto idx : perm) {
        if (idx >= dens.size() || seen[idx]) throw StructuralError("not a permutation");
        seen[idx] = true;
        permuted.push_back(dens[idx]);
    }
    int sign = permutation_sign(perm);
    FracForm num = sign < 0 ? -c.numerator() : c.numerator();
    return LocalCohClass(c.point(), std::move(permuted), std::move(num), c.localized_at());
}

void FormalSum::add(const LocalCohClass& c) {
    for (auto& part : parts_) {
        if (part.point() == c.point() && part.denominators() == c.denominators()) {
            part = add_classes(part, c);
            return;
        }
    }
    parts_.push_back(c);
}

std::string FormalSum::to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += "  (+)  ";
        out += parts_[i].to_string();
    }
    return out;
}

}  // namespace cyctan
