#pragma once

#include <map>
#include <string>
#include <vector>

#include "cyctan/localcoh.hpp"

namespace cyctan {

/// Which route produced a Cousin boundary:
///  - unit_denominator: the fraction denominator is a unit modulo the full
///    ideal, the boundary vanishes outright;
///  - rewritten: the denominator decomposed as sum a_i f_i + u * f_{p+1}
///    with u a nonzero constant, and the 1/f_{p+1} was stripped;
///  - direct: the numerator was already polynomial, the boundary is the
///    class of extension * numerator.
enum class BoundaryCase { unit_denominator, rewritten, direct };

std::string to_string(BoundaryCase c);

struct BoundaryResult {
    LocalCohClass input;
    Poly extension;
    LocalCohClass output;  // at w over denominators ++ [extension]
    BoundaryCase case_tag;
};

struct RewriteResult {
    LocalCohClass cls;
    BoundaryCase tag;
    std::vector<Poly> cofactors;  // decomposition of b against (f_1..f_p, extension)
    Poly remainder;
};

/// Rewrites fraction coefficients a/b into a/(f_{p+1}) form (up to an exact
/// constant), or certifies b as a unit modulo the extended ideal. The class
/// is unchanged in H^p_y.
RewriteResult rewrite_denominator(const LocalCohClass& c, const Poly& extension);

/// The Cousin differential at the point defined by denominators + extension.
BoundaryResult boundary(const LocalCohClass& c, const Poly& extension,
                        const std::string& w_label = "w");

/// Splits a class whose numerator mixes several fraction denominators into
/// single-denominator classes (plus one polynomial-coefficient class).
std::vector<LocalCohClass> split_by_denominator(const LocalCohClass& c);

/// Boundary of a formal sum: each summand's boundary is taken with its own
/// extension, all results are permuted onto the first summand's denominator
/// ordering (collecting signs) and added. Everything must land at the same
/// point w.
LocalCohClass boundary_of_sum(const FormalSum& sum,
                              const std::map<std::string, Poly>& extension_by_point,
                              const std::string& w_label = "w");

}  // namespace cyctan
