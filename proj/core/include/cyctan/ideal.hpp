#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cyctan/poly.hpp"

namespace cyctan {

/// Multivariate division: f = sum(quotients[i] * divisors[i]) + remainder,
/// with no remainder term divisible by any divisor's leading monomial.
struct DivisionResult {
    std::vector<Poly> quotients;
    Poly remainder;
};

DivisionResult divide(const Poly& f, const std::vector<Poly>& divisors);

/// Reduced Groebner basis together with the expression of each element as a
/// combination of the original generators (division tracking composed
/// through the Buchberger run).
struct GroebnerBasis {
    std::vector<Poly> elements;
    std::vector<std::vector<Poly>> reps;  // elements[k] = sum_j reps[k][j] * gen_j
};

/// Buchberger with cofactor tracking; the result is the reduced basis,
/// monic, sorted by increasing leading monomial. size_limit caps the
/// intermediate basis size (ResourceLimitError beyond it); 0 means use
/// KOSZUL_GB_LIMIT from the environment (default 512).
GroebnerBasis groebner(const RingPtr& ring, const std::vector<Poly>& generators,
                       std::size_t size_limit = 0);

/// An ideal of the polynomial ring, with a lazily computed, shared Groebner
/// cache (populated once; immutable afterwards).
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Poly> generators);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& generators() const { return gens_; }
    const GroebnerBasis& basis() const;

    bool is_zero_ideal() const;
    bool is_proper() const;  // basis is not {1}

    bool operator==(const Ideal& o) const;  // same reduced basis

private:
    RingPtr ring_;
    std::vector<Poly> gens_;
    struct Cache {
        std::once_flag once;
        GroebnerBasis gb;
    };
    std::shared_ptr<Cache> cache_;
};

struct Membership {
    bool in = false;
    std::vector<Poly> cofactors;  // against the ORIGINAL generators
    Poly remainder;
};

/// Normal-form membership test; cofactors reconstruct f exactly when in.
Membership ideal_member(const Poly& f, const Ideal& ideal, bool with_cofactors = true);

/// True iff f is congruent to a nonzero constant modulo the ideal.
/// Throws StructuralError on the unit ideal (no residue ring).
bool is_unit_mod(const Poly& f, const Ideal& ideal);

/// Ideal quotient (I : f), computed by Groebner elimination with a tag
/// variable in a block order.
Ideal ideal_quotient(const Ideal& ideal, const Poly& f);

struct RegularityOptions {
    /// The quotient computation is skipped once the combined term count of
    /// the stage exceeds this gate; the verdict is then "unverified".
    std::size_t quotient_term_gate = 512;
};

struct RegularityReport {
    bool ok = false;
    bool verified = false;
    std::string detail;
};

/// Checks that f_1, ..., f_p is a regular sequence: each stage ideal is
/// proper and ((f_1..f_{i-1}) : f_i) = (f_1..f_{i-1}).
RegularityReport check_regular(const std::vector<Poly>& seq, RegularityOptions opts = {});

}  // namespace cyctan
