// Acceptance suite: end-to-end identities the engine must reproduce
// exactly, with generous wall-clock guards. Prints one verdict line per
// criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cyctan/chern.hpp"
#include "cyctan/cousin.hpp"
#include "cyctan/scene.hpp"
#include "cyctan/tangent.hpp"

using namespace cyctan;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

bool g_all_ok = true;

void report(const Criterion& c) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = c.run(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("exceeded time budget");
    }
    std::printf("criterion %-38s %s  (%.3f s)%s%s\n", (c.name + ":").c_str(),
                ok ? "PASS" : "FAIL", secs, detail.empty() ? "" : "  -- ", detail.c_str());
    if (!ok) g_all_ok = false;
}

RingPtr ring3() { return make_ring({"x1", "x2", "x3"}); }
RingPtr ring4() { return make_ring({"x1", "x2", "x3", "x4"}); }

DeformationScene base_scene(const RingPtr& R, std::size_t p, const Frac& g1,
                            const std::string& ext, const std::string& label = "Y") {
    DeformationScene s;
    s.ring = R;
    s.p = p;
    for (std::size_t i = 0; i < p; ++i) s.f.push_back(Poly::variable(R, i));
    s.g.push_back(g1);
    for (std::size_t i = 1; i < p; ++i) s.g.push_back(Frac::zero(R));
    s.extension = parse_poly(R, ext);
    s.label_y = label;
    return s;
}

// ---- criterion 1: the counterexample deformation -------------------------

bool example_reproduction(std::string& detail) {
    auto R = ring3();
    DeformationScene s = base_scene(R, 2, Frac(parse_poly(R, "1"), parse_poly(R, "x3")), "x3");

    LocalCohClass c = pi(s);
    FracForm expected_pi(R, 1);
    expected_pi.add_term({1}, Frac(parse_poly(R, "1"), parse_poly(R, "x3")));
    if (!(c.numerator() == expected_pi) || !(c.denominators() == s.f)) {
        detail = "pi(Y') is " + c.to_string();
        return false;
    }

    BoundaryResult b = boundary(c, s.extension, "x");
    FracForm expected_boundary(R, 1);
    expected_boundary.add_term({1}, Frac(parse_poly(R, "1")));
    if (!(b.output.numerator() == expected_boundary)) {
        detail = "boundary is " + b.output.to_string();
        return false;
    }
    if (class_is_zero(b.output)) {
        detail = "boundary unexpectedly vanished";
        return false;
    }
    return true;
}

// ---- criterion 2: unit denominators have zero boundary -------------------

bool unit_denominator_vanishing(std::string& detail) {
    auto R = ring3();
    DeformationScene s =
        base_scene(R, 2, Frac(parse_poly(R, "1"), parse_poly(R, "1 + x1")), "x3");
    BoundaryResult b = boundary(pi(s), s.extension);
    if (b.case_tag != BoundaryCase::unit_denominator) {
        detail = "route was " + to_string(b.case_tag);
        return false;
    }
    if (!class_is_zero(b.output)) {
        detail = "boundary did not vanish";
        return false;
    }
    return true;
}

// ---- criterion 3: the corrector construction -----------------------------

bool corrector_case(const RingPtr& R, std::size_t p, const Poly& a, const std::string& ext,
                    std::string& detail) {
    DeformationScene s = base_scene(R, p, Frac(a, parse_poly(R, ext)), ext);
    CorrectorResult r = correct(s);

    std::vector<Poly> expected_z{parse_poly(R, ext)};
    for (std::size_t i = 1; i < p; ++i) expected_z.push_back(Poly::variable(R, i));
    if (r.z_sequence != expected_z) {
        detail = "unexpected Z sequence";
        return false;
    }
    if (!(r.zprime_perturbation[0] == Frac(a, Poly::variable(R, 0)))) {
        detail = "unexpected Z' perturbation";
        return false;
    }
    if (!r.milnor_member || !class_is_zero(r.certificate)) {
        detail = "sum boundary did not vanish";
        return false;
    }

    // intermediate identity: boundary(pi(Z')) = -boundary(pi(Y')) after the
    // det = -1 permutation
    const auto& by = r.y_boundary->output;
    const auto& bz = r.z_boundary->output;
    auto perm = match_permutation(bz.denominators(), by.denominators());
    std::vector<std::size_t> onto(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) onto[perm[k]] = k;
    auto cmp = permutation_comparison_maps(p + 1, onto);
    if (!(cmp.det_a1 == Rational(-1))) {
        detail = "comparison determinant was not -1";
        return false;
    }
    LocalCohClass aligned = permute_denominators(bz, onto);
    if (!(aligned.numerator() == -by.numerator())) {
        detail = "boundaries are not opposite";
        return false;
    }
    return true;
}

bool corrector_cancellation(std::string& detail) {
    auto R3 = ring3();
    for (const char* a : {"1", "x1", "x2 + 3"}) {
        if (!corrector_case(R3, 2, parse_poly(R3, a), "x3", detail)) {
            detail += " (p = 2, a = " + std::string(a) + ")";
            return false;
        }
    }
    auto R4 = ring4();
    for (const char* a : {"1", "x1", "x2 + 3"}) {
        if (!corrector_case(R4, 3, parse_poly(R4, a), "x4", detail)) {
            detail += " (p = 3, a = " + std::string(a) + ")";
            return false;
        }
    }
    return true;
}

// ---- criterion 4: brute-force composite vs closed form --------------------

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    int uniform(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(eng_);
    }
    Poly poly(const RingPtr& R, int max_degree, int max_terms) {
        Poly p(R);
        int terms = uniform(0, max_terms);
        for (int t = 0; t < terms; ++t) {
            Exps e(R->size(), 0);
            int budget = uniform(0, max_degree);
            for (int d = 0; d < budget; ++d)
                e[static_cast<std::size_t>(uniform(0, static_cast<int>(R->size()) - 1))] += 1;
            Rational q(uniform(-5, 5), uniform(1, 3));
            q.canonicalize();
            p.add_term(e, q);
        }
        return p;
    }

private:
    std::mt19937_64 eng_;
};

bool chern_oracle_equivalence(std::string& detail) {
    auto R = ring4();
    Rng rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t p = static_cast<std::size_t>(rng.uniform(1, 3));
        std::vector<DualPoly> seq;
        for (std::size_t i = 0; i < p; ++i)
            seq.emplace_back(rng.poly(R, 3, 3), rng.poly(R, 3, 3));
        auto k = build_koszul(R, seq);
        if (!(fundamental_class(k).component == closed_form_class(k))) {
            detail = "composite != closed form at trial " + std::to_string(trial);
            return false;
        }
    }

    // single-perturbation truncation formula g1 df2 ^ ... ^ dfp
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t p = static_cast<std::size_t>(rng.uniform(1, 3));
        Poly g1 = rng.poly(R, 3, 3);
        std::vector<DualPoly> seq{DualPoly(rng.poly(R, 3, 3), g1)};
        for (std::size_t i = 1; i < p; ++i)
            seq.push_back(DualPoly::embed(rng.poly(R, 3, 3)));
        auto k = build_koszul(R, seq);
        DiffForm<Poly> truncated = contract_eps(fundamental_class(k).component);

        DiffForm<Poly> expected = DiffForm<Poly>::coefficient(g1);
        for (std::size_t i = 1; i < p; ++i) expected = expected * d(seq[i].base);
        if (!(truncated == expected)) {
            detail = "truncation formula failed at trial " + std::to_string(trial);
            return false;
        }
    }

    // the oracle path agrees with the default path on the acceptance scenes
    auto R3 = ring3();
    std::vector<DeformationScene> scenes = {
        base_scene(R3, 2, Frac(parse_poly(R3, "1"), parse_poly(R3, "x3")), "x3"),
        base_scene(R3, 2, Frac(parse_poly(R3, "1"), parse_poly(R3, "1 + x1")), "x3"),
        base_scene(R3, 2, Frac(parse_poly(R3, "x2 + 3"), parse_poly(R3, "x3")), "x3"),
    };
    auto R4 = ring4();
    scenes.push_back(base_scene(R4, 3, Frac(parse_poly(R4, "x1"), parse_poly(R4, "x4")), "x4"));
    for (std::size_t i = 0; i < scenes.size(); ++i) {
        const DeformationScene& s = scenes[i];
        if (!(pi(s, PiOptions{true}).numerator() == pi(s).numerator())) {
            detail = "oracle and default paths disagree on scene " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// ---- criterion 5: property suites -----------------------------------------

bool property_suites(std::string& detail) {
    auto R = ring4();
    Rng rng(211);

    // d o d = 0 and Leibniz, 200 random polynomials
    for (int i = 0; i < 200; ++i) {
        Poly f = rng.poly(R, 4, 4), g = rng.poly(R, 4, 4);
        if (!d(d(f)).is_zero()) {
            detail = "d o d != 0";
            return false;
        }
        if (!(d(f * g) == d(g).scale(f) + d(f).scale(g))) {
            detail = "Leibniz failed";
            return false;
        }
    }

    // A_i o A_{i+1} = 0 for freshly built complexes
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t p = static_cast<std::size_t>(rng.uniform(1, 4));
        std::vector<Poly> seq;
        for (std::size_t i = 0; i < p; ++i) {
            Poly f = rng.poly(R, 3, 3);
            if (f.is_zero()) f = Poly::variable(R, i % R->size());
            seq.push_back(f);
        }
        auto k = build_koszul(R, seq);
        for (std::size_t i = 1; i < p; ++i) {
            auto prod = k.A(i) * k.A(i + 1);
            for (std::size_t r = 0; r < prod.rows(); ++r)
                for (std::size_t c = 0; c < prod.cols(); ++c)
                    if (!prod(r, c).is_zero()) {
                        detail = "Koszul composite nonzero";
                        return false;
                    }
        }
    }

    // class_is_zero invariance under 100 ideal-multiple shifts
    {
        auto R3 = ring3();
        std::vector<Poly> dens{parse_poly(R3, "x1"), parse_poly(R3, "x2")};
        Rng srng(307);
        for (int i = 0; i < 100; ++i) {
            FracForm base(R3, 1);
            base.add_term({2}, Frac(srng.poly(R3, 2, 2)));
            LocalCohClass c("y", dens, base);
            bool verdict = class_is_zero(c);
            FracForm shifted = base;
            for (const auto& f : dens) {
                FracForm noise(R3, 1);
                noise.add_term({static_cast<std::uint32_t>(srng.uniform(0, 2))},
                               Frac(srng.poly(R3, 2, 2) * f));
                shifted = shifted + noise;
            }
            if (class_is_zero(c.with_numerator(shifted)) != verdict) {
                detail = "ideal-shift changed the verdict";
                return false;
            }
        }
    }

    // permutation sign involution
    {
        auto R3 = ring3();
        std::vector<Poly> dens{parse_poly(R3, "x1"), parse_poly(R3, "x2"),
                               parse_poly(R3, "x3")};
        FracForm num(R3, 1);
        num.add_term({1}, Frac(parse_poly(R3, "x2 + 3")));
        LocalCohClass c("w", dens, num);
        for (std::vector<std::size_t> t : {std::vector<std::size_t>{2, 1, 0},
                                           std::vector<std::size_t>{1, 0, 2},
                                           std::vector<std::size_t>{0, 2, 1}}) {
            LocalCohClass once = permute_denominators(c, t);
            LocalCohClass twice = permute_denominators(once, t);
            if (!(twice.numerator() == c.numerator()) ||
                twice.denominators() != c.denominators()) {
                detail = "transposition involution failed";
                return false;
            }
        }
    }

    // pi linearity in g
    {
        auto R3 = ring3();
        Rng prng(401);
        for (int i = 0; i < 20; ++i) {
            Poly ga = prng.poly(R3, 2, 2), gb = prng.poly(R3, 2, 2);
            auto mk = [&](Poly g) {
                DeformationScene s;
                s.ring = R3;
                s.p = 2;
                s.f = {parse_poly(R3, "x1"), parse_poly(R3, "x2")};
                s.g = {Frac(std::move(g)), Frac::zero(R3)};
                s.extension = parse_poly(R3, "x3");
                return pi(s).numerator();
            };
            if (!(mk(ga + gb) == mk(ga) + mk(gb))) {
                detail = "pi is not additive in g";
                return false;
            }
        }
    }

    // cofactor reconstruction identity on 100 random members
    {
        auto R3 = ring3();
        Rng mrng(503);
        std::vector<Poly> gens{parse_poly(R3, "x1^2 - x3"), parse_poly(R3, "x1*x2 + 1"),
                               parse_poly(R3, "x2^3")};
        Ideal I(R3, gens);
        for (int i = 0; i < 100; ++i) {
            Poly member(R3);
            for (const auto& g : gens) member += mrng.poly(R3, 2, 2) * g;
            Membership m = ideal_member(member, I);
            if (!m.in) {
                detail = "member not recognized";
                return false;
            }
            Poly rebuilt(R3);
            for (std::size_t j = 0; j < gens.size(); ++j)
                rebuilt += m.cofactors[j] * gens[j];
            rebuilt += m.remainder;
            if (!(rebuilt == member)) {
                detail = "cofactors do not reconstruct the member";
                return false;
            }
        }
    }
    return true;
}

// ---- criterion 6: Milnor certification ------------------------------------

bool milnor_certification(std::string& detail) {
    auto R3 = ring3();
    auto R4 = ring4();

    // corrected case-2 pairs from criterion 3, p = 2 and p = 3
    struct PairSpec {
        RingPtr R;
        std::size_t p;
        const char* a;
        const char* ext;
    };
    std::vector<PairSpec> pairs = {
        {R3, 2, "1", "x3"},      {R3, 2, "x1", "x3"}, {R3, 2, "x2 + 3", "x3"},
        {R4, 3, "1", "x4"},      {R4, 3, "x1", "x4"}, {R4, 3, "x2 + 3", "x4"},
    };
    for (const auto& ps : pairs) {
        DeformationScene y =
            base_scene(ps.R, ps.p, Frac(parse_poly(ps.R, ps.a),
                                            parse_poly(ps.R, ps.ext)),
                       ps.ext, "Y");
        DeformationScene z;
        z.ring = ps.R;
        z.p = ps.p;
        z.f.push_back(parse_poly(ps.R, ps.ext));
        for (std::size_t i = 1; i < ps.p; ++i) z.f.push_back(Poly::variable(ps.R, i));
        z.g.push_back(Frac(parse_poly(ps.R, ps.a), Poly::variable(ps.R, 0)));
        for (std::size_t i = 1; i < ps.p; ++i) z.g.push_back(Frac::zero(ps.R));
        z.extension = Poly::variable(ps.R, 0);
        z.label_y = "Z";
        if (!verify_milnor_cycle({y, z})) {
            detail = std::string("pair failed for a = ") + ps.a;
            return false;
        }
    }

    // lone case-1 scenes certify
    DeformationScene unit =
        base_scene(R3, 2, Frac(parse_poly(R3, "x2"), parse_poly(R3, "1 + x1")), "x3");
    if (!verify_milnor_cycle({unit})) {
        detail = "case-1 lone scene failed";
        return false;
    }

    // the criterion-1 lone scene does not
    DeformationScene lone =
        base_scene(R3, 2, Frac(parse_poly(R3, "1"), parse_poly(R3, "x3")), "x3");
    if (verify_milnor_cycle({lone})) {
        detail = "counterexample scene unexpectedly certified";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1 (example reproduction)", 1.0, example_reproduction},
        {"2 (unit-denominator vanishing)", 1.0, unit_denominator_vanishing},
        {"3 (corrector cancellation)", 5.0, corrector_cancellation},
        {"4 (chern oracle equivalence)", 10.0, chern_oracle_equivalence},
        {"5 (property suites)", 30.0, property_suites},
        {"6 (milnor certification)", 10.0, milnor_certification},
    };
    for (const auto& c : criteria) report(c);
    return g_all_ok ? 0 : 1;
}
