#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyctan/chern.hpp"
#include "cyctan/cousin.hpp"

namespace cyctan {

/// A first-order deformation scene: Y cut out by the regular sequence f,
/// deformed by f_i + eps g_i, with one extra equation extending f to the
/// codimension-(p+1) point w where boundaries are evaluated.
struct DeformationScene {
    RingPtr ring;
    std::size_t p = 0;
    std::vector<Poly> f;
    std::vector<Frac> g;
    Poly extension;
    std::string label_y = "Y";
    std::string label_w = "w";
    bool check_regularity = true;
};

/// Validates lengths, localization constraints and (advisorily) regularity.
/// Advisory findings are appended to warnings when given.
void validate_scene(const DeformationScene& scene, std::vector<std::string>* warnings = nullptr);

struct PiOptions {
    /// Also run the brute-force matrix composite and require it to agree
    /// with the closed form.
    bool oracle = false;
};

/// The deformation class of the scene: Koszul complex over R[eps],
/// fundamental class, eps-truncation, read as a generalized fraction at y.
LocalCohClass pi(const DeformationScene& scene, PiOptions opts = {},
                 std::vector<std::string>* warnings = nullptr);

struct Classification {
    int case_id = 0;  // 1 or 2
    Poly b;
    std::vector<Poly> cofactors;  // decomposition against (f_1..f_p, extension)
    Poly remainder;               // normal form of b modulo the full ideal
};

/// Case 1 when the perturbation denominator is a unit modulo
/// (f_1,...,f_p,f_{p+1}); case 2 when it lies in that ideal.
Classification classify_case(const DeformationScene& scene);

struct CorrectorResult {
    bool trivial = false;  // case 1: no corrector needed
    std::vector<Poly> z_sequence;
    std::vector<Frac> zprime_perturbation;
    std::optional<BoundaryResult> y_boundary;
    std::optional<BoundaryResult> z_boundary;
    LocalCohClass certificate;  // boundary of the (corrected) sum at w
    bool milnor_member = false;
};

/// Builds the corrector deformation Z' = (f_{p+1} + eps a/f_1, f_2, ...,
/// f_p) whose class cancels the boundary obstruction of the scene, and
/// certifies that the summed boundary vanishes at w.
CorrectorResult correct(const DeformationScene& scene, std::vector<std::string>* warnings = nullptr);

/// True iff the boundary of the summed classes of the scenes vanishes at
/// the common point w; this certifies membership in the kernel of the
/// K-theoretic differential at the form level.
bool verify_milnor_cycle(const std::vector<DeformationScene>& scenes,
                         std::vector<std::string>* warnings = nullptr);

}  // namespace cyctan
