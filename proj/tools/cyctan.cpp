// cyctan: first-order deformations of cycles, their local cohomology
// classes, Cousin boundaries and corrector certificates, driven by JSON
// scene files.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cyctan/scene.hpp"

using namespace cyctan;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
    bool json = false;
    bool pretty = false;
    bool oracle = false;
    unsigned zero_power = 1;
    std::string batch_dir;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StructuralError("cannot read scene file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ordered_json json_frac(const Frac& f) {
    if (f.is_polynomial()) return f.num().to_string();
    return ordered_json{{"num", f.num().to_string()}, {"den", f.den().to_string()}};
}

ordered_json json_class(const LocalCohClass& c) {
    ordered_json dens = ordered_json::array();
    for (const auto& f : c.denominators()) dens.push_back(f.to_string());
    return ordered_json{{"point", c.point()},
                        {"numerator", c.numerator().to_string()},
                        {"denominators", std::move(dens)},
                        {"rendered", c.to_string()}};
}

ordered_json scene_echo(const DeformationScene& s) {
    return ordered_json::parse(render_scene(s));
}

ordered_json json_cofactors(const std::vector<Poly>& cofs) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : cofs) arr.push_back(c.to_string());
    return arr;
}

// Vanishing verdict plus the Ext-level caveat for nonzero classes.
void attach_vanishing(ordered_json& doc, const LocalCohClass& cls, const Options& opts,
                      std::vector<std::string>& warnings) {
    bool zero = class_is_zero(cls);
    ordered_json b;
    b["class"] = json_class(cls);
    b["is_zero"] = zero;
    if (opts.zero_power > 1)
        b["is_zero_at_power_" + std::to_string(opts.zero_power)] =
            class_is_zero_at_power(cls, opts.zero_power);
    doc["boundary"] = std::move(b);
    if (zero) {
        doc["verdict"] = "boundary vanishes at the tested point(s): " + cls.point();
    } else {
        doc["verdict"] =
            "boundary nonzero at exponent 1 at " + cls.point() + " (Ext-level verdict)";
        warnings.push_back(
            "nonvanishing is certified at the Ext level (first denominator powers); deeper "
            "colimit behaviour is not examined");
    }
}

ordered_json run_pi(const DeformationScene& scene, const Options& opts,
                    std::vector<std::string>& warnings) {
    ordered_json doc;
    doc["command"] = "pi";
    doc["scene"] = scene_echo(scene);
    LocalCohClass cls = pi(scene, PiOptions{opts.oracle}, &warnings);
    doc["class"] = json_class(cls);
    doc["verdict"] = cls.numerator().is_zero() ? "pi(Y') is the zero class"
                                               : "pi(Y') computed at " + cls.point();
    return doc;
}

ordered_json run_boundary(const DeformationScene& scene, const Options& opts,
                          std::vector<std::string>& warnings) {
    ordered_json doc;
    doc["command"] = "boundary";
    doc["scene"] = scene_echo(scene);
    LocalCohClass cls = pi(scene, PiOptions{opts.oracle}, &warnings);
    doc["class"] = json_class(cls);

    // sums of simple terms split by linearity automatically
    LocalCohClass total = LocalCohClass::zero(scene.label_w, [&] {
        std::vector<Poly> ext = scene.f;
        ext.push_back(scene.extension);
        return ext;
    }(), scene.ring, static_cast<int>(scene.p) - 1);
    std::string tag;
    for (const auto& piece : split_by_denominator(cls)) {
        BoundaryResult r = boundary(piece, scene.extension, scene.label_w);
        total = add_classes(total, r.output);
        std::string t = to_string(r.case_tag);
        if (tag.empty())
            tag = t;
        else if (tag != t)
            tag = "mixed";
    }
    doc["case"] = tag;
    attach_vanishing(doc, total, opts, warnings);
    return doc;
}

ordered_json run_classify(const DeformationScene& scene, const Options&,
                          std::vector<std::string>& warnings) {
    ordered_json doc;
    doc["command"] = "classify";
    doc["scene"] = scene_echo(scene);
    Classification cls = classify_case(scene);
    validate_scene(scene, &warnings);
    ordered_json c;
    c["case"] = cls.case_id;
    c["b"] = cls.b.to_string();
    c["cofactors"] = json_cofactors(cls.cofactors);
    c["remainder"] = cls.remainder.to_string();
    doc["case"] = std::move(c);
    doc["verdict"] = cls.case_id == 1
                         ? "case 1: b is a unit modulo (f_1,...,f_p,f_{p+1})"
                         : "case 2: b lies in (f_1,...,f_p,f_{p+1}); a corrector exists";
    return doc;
}

ordered_json run_correct(const DeformationScene& scene, const Options& opts,
                         std::vector<std::string>& warnings) {
    ordered_json doc;
    doc["command"] = "correct";
    doc["scene"] = scene_echo(scene);
    CorrectorResult r = correct(scene, &warnings);
    attach_vanishing(doc, r.certificate, opts, warnings);

    ordered_json corr;
    corr["trivial"] = r.trivial;
    if (!r.trivial) {
        ordered_json zs = ordered_json::array();
        for (const auto& f : r.z_sequence) zs.push_back(f.to_string());
        corr["Z_sequence"] = std::move(zs);
        ordered_json zp = ordered_json::array();
        for (const auto& g : r.zprime_perturbation) zp.push_back(json_frac(g));
        corr["Zprime_perturbation"] = std::move(zp);
    }
    corr["milnor_member"] = r.milnor_member;
    doc["corrector"] = std::move(corr);
    doc["verdict"] = r.milnor_member
                         ? (r.trivial ? "pi(Y') alone lies in the kernel at the tested point: " +
                                            scene.label_w
                                      : "sum boundary vanishes at " + scene.label_w +
                                            "; pi(Y') + pi(Z') lies in the kernel there")
                         : "correction failed to cancel the boundary";
    return doc;
}

ordered_json run_verify(std::vector<DeformationScene> scenes, bool with_corrector,
                        const Options& opts, std::vector<std::string>& warnings) {
    ordered_json doc;
    doc["command"] = "verify";
    ordered_json echoes = ordered_json::array();
    for (const auto& s : scenes) echoes.push_back(scene_echo(s));
    doc["scene"] = std::move(echoes);

    bool member;
    if (with_corrector) {
        if (scenes.size() != 1)
            throw StructuralError("--with-corrector applies to a single scene");
        CorrectorResult r = correct(scenes.front(), &warnings);
        member = r.milnor_member;
        attach_vanishing(doc, r.certificate, opts, warnings);
    } else {
        // distinct point labels; uniquify the defaults
        for (std::size_t i = 1; i < scenes.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (scenes[i].label_y == scenes[j].label_y) {
                    scenes[i].label_y += "#" + std::to_string(i + 1);
                    warnings.push_back("duplicate scene label renamed to " + scenes[i].label_y);
                    break;
                }
        member = verify_milnor_cycle(scenes, &warnings);
    }
    doc["milnor_member"] = member;
    doc["verdict"] = member ? "the summed Koszul class lies in the kernel of the K-theoretic "
                              "differential at the tested point"
                            : "the summed boundary does not vanish at the tested point";
    return doc;
}

ordered_json run_koszul(const DeformationScene& scene, const Options&,
                        std::vector<std::string>& warnings) {
    ordered_json doc;
    doc["command"] = "koszul";
    doc["scene"] = scene_echo(scene);
    validate_scene(scene, &warnings);

    std::vector<DualFrac> lifted;
    for (std::size_t i = 0; i < scene.p; ++i)
        lifted.emplace_back(Frac(scene.f[i]), scene.g[i]);
    auto k = build_koszul(scene.ring, lifted);

    ordered_json kj;
    ordered_json seq = ordered_json::array();
    for (const auto& h : k.sequence) seq.push_back(h.to_string());
    kj["sequence"] = std::move(seq);
    ordered_json mats = ordered_json::array();
    for (std::size_t i = 1; i <= k.length(); ++i) {
        const auto& A = k.A(i);
        ordered_json m;
        m["name"] = "A_" + std::to_string(i);
        ordered_json dom = ordered_json::array(), cod = ordered_json::array();
        for (const auto& s : k.bases[i]) dom.push_back(wedge_label(s));
        for (const auto& s : k.bases[i - 1]) cod.push_back(wedge_label(s));
        m["domain_basis"] = std::move(dom);
        m["codomain_basis"] = std::move(cod);
        ordered_json rows = ordered_json::array();
        for (std::size_t r = 0; r < A.rows(); ++r) {
            ordered_json row = ordered_json::array();
            for (std::size_t c = 0; c < A.cols(); ++c) row.push_back(A(r, c).to_string());
            rows.push_back(std::move(row));
        }
        m["entries"] = std::move(rows);
        mats.push_back(std::move(m));
    }
    kj["matrices"] = std::move(mats);
    doc["koszul"] = std::move(kj);
    doc["verdict"] = "Koszul complex over R[eps] built";
    return doc;
}

void print_document(const ordered_json& doc, const Options& opts) {
    if (opts.pretty) {
        std::cout << doc.dump(2) << "\n";
    } else if (opts.json) {
        std::cout << doc.dump() << "\n";
    } else {
        // terse human-readable summary
        if (doc.contains("command")) std::cout << "command:  " << doc["command"].get<std::string>() << "\n";
        if (doc.contains("class"))
            std::cout << "class:    " << doc["class"]["rendered"].get<std::string>() << "\n";
        if (doc.contains("case") && doc["case"].is_string())
            std::cout << "case:     " << doc["case"].get<std::string>() << "\n";
        if (doc.contains("case") && doc["case"].is_object())
            std::cout << "case:     " << doc["case"]["case"].dump()
                      << "  (b = " << doc["case"]["b"].get<std::string>() << ")\n";
        if (doc.contains("boundary"))
            std::cout << "boundary: " << doc["boundary"]["class"]["rendered"].get<std::string>()
                      << "\n";
        if (doc.contains("corrector") && doc["corrector"].contains("Z_sequence")) {
            std::cout << "Z:        [";
            bool first = true;
            for (const auto& f : doc["corrector"]["Z_sequence"]) {
                if (!first) std::cout << ", ";
                std::cout << f.get<std::string>();
                first = false;
            }
            std::cout << "]\n";
        }
        if (doc.contains("koszul")) {
            for (const auto& m : doc["koszul"]["matrices"]) {
                auto join = [](const ordered_json& arr) {
                    std::string s;
                    for (const auto& e : arr) {
                        if (!s.empty()) s += ", ";
                        s += e.get<std::string>();
                    }
                    return s;
                };
                std::cout << m["name"].get<std::string>() << "  ("
                          << join(m["domain_basis"]) << ")  ->  ("
                          << join(m["codomain_basis"]) << ")\n";
                for (const auto& row : m["entries"]) {
                    std::cout << "  [ ";
                    bool first = true;
                    for (const auto& e : row) {
                        if (!first) std::cout << " | ";
                        std::cout << e.get<std::string>();
                        first = false;
                    }
                    std::cout << " ]\n";
                }
            }
        }
        if (doc.contains("milnor_member"))
            std::cout << "milnor:   " << (doc["milnor_member"].get<bool>() ? "true" : "false")
                      << "\n";
        if (doc.contains("verdict"))
            std::cout << "verdict:  " << doc["verdict"].get<std::string>() << "\n";
        if (doc.contains("warnings"))
            for (const auto& w : doc["warnings"])
                std::cout << "warning:  " << w.get<std::string>() << "\n";
    }
}

using Runner = std::function<ordered_json(const DeformationScene&, const Options&,
                                          std::vector<std::string>&)>;

int run_single(const Runner& runner, const std::string& path, const Options& opts) {
    std::vector<std::string> warnings;
    ordered_json doc = runner(parse_scene(slurp(path)), opts, warnings);
    if (!warnings.empty()) doc["warnings"] = warnings;
    print_document(doc, opts);
    return 0;
}

int run_batch(const Runner& runner, const Options& opts) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(opts.batch_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw StructuralError("batch directory holds no .json scenes");

    ordered_json all = ordered_json::array();
    int worst = 0;
    for (const auto& f : files) {
        ordered_json doc;
        std::vector<std::string> warnings;
        try {
            doc = runner(parse_scene(slurp(f.string())), opts, warnings);
            if (!warnings.empty()) doc["warnings"] = warnings;
        } catch (const UnsupportedCaseError& e) {
            doc = ordered_json{{"error", e.what()}, {"decomposition", e.decomposition()}};
            worst = std::max(worst, 2);
        } catch (const Error& e) {
            doc = ordered_json{{"error", e.what()}};
            worst = std::max(worst, 1);
        }
        doc["file"] = f.string();
        all.push_back(std::move(doc));
    }
    std::cout << (opts.pretty ? all.dump(2) : all.dump()) << "\n";
    return worst;
}

int dispatch(const Runner& runner, const std::string& path, const Options& opts) {
    if (!opts.batch_dir.empty()) return run_batch(runner, opts);
    return run_single(runner, path, opts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"first-order deformations of cycles: Koszul classes, Cousin boundaries, "
                 "corrector certificates"};
    app.require_subcommand(1);

    Options opts;
    app.add_flag("--json", opts.json, "machine-readable output (compact JSON)");
    app.add_flag("--pretty", opts.pretty, "indented JSON output");
    app.add_flag("--oracle", opts.oracle,
                 "cross-check the closed form against the brute-force matrix composite");
    app.add_option("--zero-power", opts.zero_power,
                   "also test vanishing with denominators raised to this power");
    app.add_option("--batch", opts.batch_dir, "run on every .json scene in a directory");

    std::string scene_path;
    std::vector<std::string> verify_paths;
    bool with_corrector = false;

    auto* cmd_pi = app.add_subcommand("pi", "deformation class of the scene at y");
    cmd_pi->add_option("scene", scene_path, "scene file");
    auto* cmd_boundary =
        app.add_subcommand("boundary", "Cousin boundary of pi at the extension point");
    cmd_boundary->add_option("scene", scene_path, "scene file");
    auto* cmd_classify = app.add_subcommand("classify", "case 1 / case 2 classification");
    cmd_classify->add_option("scene", scene_path, "scene file");
    auto* cmd_correct = app.add_subcommand("correct", "build and certify the corrector Z'");
    cmd_correct->add_option("scene", scene_path, "scene file");
    auto* cmd_verify = app.add_subcommand("verify", "Milnor-cycle verdict for scenes");
    cmd_verify->add_option("scenes", verify_paths, "scene files");
    cmd_verify->add_flag("--with-corrector", with_corrector,
                         "verify the scene together with its corrector");
    auto* cmd_koszul = app.add_subcommand("koszul", "print the lifted Koszul complex");
    cmd_koszul->add_option("scene", scene_path, "scene file");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_pi->parsed()) return dispatch(run_pi, scene_path, opts);
        if (cmd_boundary->parsed()) return dispatch(run_boundary, scene_path, opts);
        if (cmd_classify->parsed()) return dispatch(run_classify, scene_path, opts);
        if (cmd_correct->parsed()) return dispatch(run_correct, scene_path, opts);
        if (cmd_koszul->parsed()) return dispatch(run_koszul, scene_path, opts);
        if (cmd_verify->parsed()) {
            if (verify_paths.empty() && opts.batch_dir.empty())
                throw StructuralError("verify needs at least one scene file");
            if (!opts.batch_dir.empty()) {
                Runner runner = [&](const DeformationScene& s, const Options& o,
                                    std::vector<std::string>& w) {
                    return run_verify({s}, with_corrector, o, w);
                };
                return run_batch(runner, opts);
            }
            std::vector<DeformationScene> scenes;
            for (const auto& p : verify_paths) scenes.push_back(parse_scene(slurp(p)));
            std::vector<std::string> warnings;
            ordered_json doc = run_verify(std::move(scenes), with_corrector, opts, warnings);
            if (!warnings.empty()) doc["warnings"] = warnings;
            print_document(doc, opts);
            return 0;
        }
    } catch (const UnsupportedCaseError& e) {
        std::cerr << "unsupported case: " << e.what() << "\n";
        if (!e.decomposition().empty()) std::cerr << "decomposition: " << e.decomposition() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
