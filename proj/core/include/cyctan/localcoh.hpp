#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyctan/forms.hpp"
#include "cyctan/ideal.hpp"

namespace cyctan {

using FracForm = DiffForm<Frac>;

/// Generalized fraction [ numerator | f_1, ..., f_k ] supported at a named
/// point: a local cohomology class represented at the Ext level. When
/// localized_at is set, fraction denominators appearing in the numerator
/// must avoid that prime.
class LocalCohClass {
public:
    LocalCohClass(std::string point, std::vector<Poly> denominators, FracForm numerator,
                  std::optional<Ideal> localized_at = std::nullopt);

    static LocalCohClass zero(std::string point, std::vector<Poly> denominators,
                              const RingPtr& ring, int degree);

    const std::string& point() const { return point_; }
    const std::vector<Poly>& denominators() const { return denoms_; }
    const FracForm& numerator() const { return num_; }
    const std::optional<Ideal>& localized_at() const { return localized_; }
    const RingPtr& ring() const { return num_.ring(); }

    LocalCohClass with_numerator(FracForm n) const;

    std::string to_string() const;  // "[ numerator | f1, ..., fk ] @ point"

private:
    std::string point_;
    std::vector<Poly> denoms_;
    FracForm num_;
    std::optional<Ideal> localized_;
};

/// Vanishing at the Ext level: every wedge coefficient of the numerator
/// lies in the ideal generated by the denominators. Requires polynomial
/// coefficients; a genuine fraction raises StructuralError naming it.
bool class_is_zero(const LocalCohClass& c);

/// Secondary check with denominators raised to a power: coefficient *
/// (prod f_i)^(n-1) membership in (f_1^n, ..., f_k^n).
bool class_is_zero_at_power(const LocalCohClass& c, unsigned n);

/// Equality over the same point and denominator sequence, as vanishing of
/// the difference.
bool class_equal(const LocalCohClass& a, const LocalCohClass& b);

LocalCohClass negate(const LocalCohClass& c);

/// Same point, same denominators: adds numerators. Anything else is a
/// formal sum; use FormalSum.
LocalCohClass add_classes(const LocalCohClass& a, const LocalCohClass& b);

/// Reorders the denominator sequence; the numerator picks up the sign of
/// the permutation (the determinant of the degree-1 Koszul comparison map).
/// perm[k] = position in the OLD sequence of the k-th new denominator.
LocalCohClass permute_denominators(const LocalCohClass& c, const std::vector<std::size_t>& perm);

/// Formal direct sum of classes supported at (possibly) distinct points.
/// Parts with equal point and denominator sequence are merged.
class FormalSum {
public:
    FormalSum() = default;

    void add(const LocalCohClass& c);
    const std::vector<LocalCohClass>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    std::string to_string() const;

private:
    std::vector<LocalCohClass> parts_;
};

}  // namespace cyctan
