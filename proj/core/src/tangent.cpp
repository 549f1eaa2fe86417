#include "cyctan/tangent.hpp"

#include <sstream>

namespace cyctan {

void validate_scene(const DeformationScene& scene, std::vector<std::string>* warnings) {
    if (!scene.ring) throw StructuralError("scene has no ring");
    if (scene.p == 0) throw StructuralError("codimension p must be at least 1");
    if (scene.f.size() != scene.p)
        throw StructuralError("scene needs exactly p generators, got " +
                              std::to_string(scene.f.size()));
    if (scene.g.size() != scene.p)
        throw StructuralError("scene needs exactly p perturbations, got " +
                              std::to_string(scene.g.size()));
    for (const auto& fi : scene.f) {
        require_same_ring(scene.ring, fi.ring(), "scene");
        if (fi.is_zero()) throw StructuralError("generator f_i is zero");
    }
    for (const auto& gi : scene.g) require_same_ring(scene.ring, gi.ring(), "scene");
    require_same_ring(scene.ring, scene.extension.ring(), "scene");
    if (scene.extension.is_zero()) throw StructuralError("extension polynomial is zero");

    Ideal prime(scene.ring, scene.f);
    for (const auto& gi : scene.g) {
        if (gi.is_polynomial()) continue;
        if (ideal_member(gi.den(), prime, false).in)
            throw LocalizationError("perturbation denominator " + gi.den().to_string() +
                                    " lies in (f_1,...,f_p)");
    }

    if (scene.check_regularity) {
        RegularityReport r = check_regular(scene.f);
        if (!r.ok)
            throw StructuralError("f is not a regular sequence: " + r.detail);
        if (!r.verified && warnings) warnings->push_back("regularity of f " + r.detail);
        std::vector<Poly> extended = scene.f;
        extended.push_back(scene.extension);
        RegularityReport re = check_regular(extended);
        if (!re.ok)
            throw StructuralError("extension does not extend f to a regular sequence: " +
                                  re.detail);
        if (!re.verified && warnings)
            warnings->push_back("regularity of the extended sequence " + re.detail);
    } else if (warnings) {
        warnings->push_back("regularity checks skipped by request");
    }
}

LocalCohClass pi(const DeformationScene& scene, PiOptions opts,
                 std::vector<std::string>* warnings) {
    validate_scene(scene, warnings);

    std::vector<DualFrac> lifted;
    lifted.reserve(scene.p);
    for (std::size_t i = 0; i < scene.p; ++i)
        lifted.emplace_back(Frac(scene.f[i]), scene.g[i]);

    KoszulComplex<DualFrac> complex = build_koszul(scene.ring, std::move(lifted));
    DiffForm<DualFrac> component = closed_form_class(complex);

    if (opts.oracle) {
        FundClass<DualFrac> brute = fundamental_class(complex);
        if (!(brute.component == component))
            throw StructuralError(
                "oracle mismatch: brute-force differential composite disagrees with the "
                "closed-form wedge");
        component = brute.component;
    }

    NewtonRep rep = truncate(FundClass<DualFrac>{complex, component});
    return LocalCohClass(scene.label_y, rep.denominators, rep.numerator,
                         Ideal(scene.ring, scene.f));
}

namespace {

// The single nonzero perturbation must sit in the first slot, matching the
// analyzed case; everything else splits by linearity upstream. The zero
// deformation passes through (b = 1, trivially case 1).
const Frac* single_perturbation(const DeformationScene& scene) {
    const Frac* found = nullptr;
    for (std::size_t i = 0; i < scene.p; ++i) {
        if (scene.g[i].is_zero()) continue;
        if (found)
            throw UnsupportedCaseError(
                "several nonzero perturbations; split the scene by linearity first");
        if (i != 0)
            throw UnsupportedCaseError(
                "the nonzero perturbation must sit on f_1 (reorder the generators)");
        found = &scene.g[i];
    }
    return found;
}

}  // namespace

Classification classify_case(const DeformationScene& scene) {
    validate_scene(scene, nullptr);
    const Frac* g1 = single_perturbation(scene);
    Poly b = (g1 && !g1->is_polynomial()) ? g1->den() : Poly(scene.ring, Rational(1));

    std::vector<Poly> extended = scene.f;
    extended.push_back(scene.extension);
    Ideal full(scene.ring, extended);
    if (!full.is_proper())
        throw StructuralError("(f_1,...,f_p,f_{p+1}) is the unit ideal; w is empty");

    Classification out;
    out.b = b;
    Membership m = ideal_member(b, full, true);
    out.cofactors = std::move(m.cofactors);
    out.remainder = m.remainder;
    if (m.in) {
        out.case_id = 2;
    } else if (m.remainder.is_constant() && !m.remainder.is_zero()) {
        out.case_id = 1;
    } else {
        throw UnsupportedCaseError(
            "denominator " + b.to_string() +
                " is neither in the extended ideal nor certifiably a unit modulo it",
            "normal form: " + m.remainder.to_string());
    }
    return out;
}

CorrectorResult correct(const DeformationScene& scene, std::vector<std::string>* warnings) {
    Classification cls = classify_case(scene);
    LocalCohClass pi_y = pi(scene, {}, warnings);

    if (cls.case_id == 1) {
        BoundaryResult by = boundary(pi_y, scene.extension, scene.label_w);
        CorrectorResult out{/*trivial=*/true,
                            {},
                            {},
                            by,
                            std::nullopt,
                            by.output,
                            class_is_zero(by.output)};
        return out;
    }

    // case 2: rewrite a/b with b = sum a_i f_i + u f_{p+1}; the corrector
    // lives on Z = (f_{p+1}, f_2, ..., f_p) and perturbs by a'/f_1
    const Frac& g1 = scene.g[0];
    const Poly& u = cls.cofactors.back();
    if (!u.is_constant() || u.is_zero())
        throw UnsupportedCaseError(
            "decomposition of " + cls.b.to_string() + " has a non-unit cofactor on " +
                scene.extension.to_string() + "; the corrector construction needs n = 1",
            u.to_string());
    Poly a_eff = g1.num() * (Rational(1) / u.constant_value());

    DeformationScene corrector;
    corrector.ring = scene.ring;
    corrector.p = scene.p;
    corrector.f.push_back(scene.extension);
    for (std::size_t i = 1; i < scene.p; ++i) corrector.f.push_back(scene.f[i]);
    corrector.g.emplace_back(a_eff, scene.f[0]);
    for (std::size_t i = 1; i < scene.p; ++i) corrector.g.push_back(Frac::zero(scene.ring));
    corrector.extension = scene.f[0];
    corrector.label_y = scene.label_y + "_corrector";
    corrector.label_w = scene.label_w;
    corrector.check_regularity = scene.check_regularity;

    LocalCohClass pi_z = pi(corrector, {}, warnings);

    BoundaryResult by = boundary(pi_y, scene.extension, scene.label_w);
    BoundaryResult bz = boundary(pi_z, corrector.extension, scene.label_w);

    FormalSum sum;
    sum.add(pi_y);
    sum.add(pi_z);
    std::map<std::string, Poly> extensions{{pi_y.point(), scene.extension},
                                           {pi_z.point(), corrector.extension}};
    LocalCohClass certificate = boundary_of_sum(sum, extensions, scene.label_w);

    CorrectorResult out{/*trivial=*/false,
                        corrector.f,
                        corrector.g,
                        std::move(by),
                        std::move(bz),
                        std::move(certificate),
                        false};
    out.milnor_member = class_is_zero(out.certificate);
    return out;
}

bool verify_milnor_cycle(const std::vector<DeformationScene>& scenes,
                         std::vector<std::string>* warnings) {
    if (scenes.empty()) throw StructuralError("verify_milnor_cycle: no scenes");

    FormalSum sum;
    std::map<std::string, Poly> extensions;
    for (const auto& scene : scenes) {
        LocalCohClass cls = pi(scene, {}, warnings);
        auto [it, inserted] = extensions.emplace(cls.point(), scene.extension);
        if (!inserted)
            throw StructuralError("verify_milnor_cycle: duplicate point label '" +
                                  cls.point() + "'; label the scenes distinctly");
        sum.add(cls);
    }
    LocalCohClass total = boundary_of_sum(sum, extensions, scenes.front().label_w);
    return class_is_zero(total);
}

}  // namespace cyctan
