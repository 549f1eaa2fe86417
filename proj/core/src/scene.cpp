#include "cyctan/scene.hpp"

#include <json.hpp>

namespace cyctan {

using ordered_json = nlohmann::ordered_json;

namespace {

Poly parse_field_poly(const RingPtr& ring, const std::string& text, const std::string& field) {
    try {
        return parse_poly(ring, text);
    } catch (const ParseError& e) {
        throw ParseError(field + ": " + e.what(), e.offset());
    }
}

}  // namespace

DeformationScene parse_scene(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("scene is not valid JSON: ") + e.what(),
                         e.byte > 0 ? e.byte - 1 : 0);
    }
    if (!doc.is_object()) throw StructuralError("scene document must be a JSON object");

    if (!doc.contains("variables") || !doc["variables"].is_array())
        throw StructuralError("scene field 'variables' must be an array of strings");
    std::vector<std::string> vars;
    for (const auto& v : doc["variables"]) {
        if (!v.is_string()) throw StructuralError("scene field 'variables' must hold strings");
        vars.push_back(v.get<std::string>());
    }
    if (vars.empty()) throw StructuralError("scene field 'variables' is empty");
    RingPtr ring = make_ring(vars);

    if (!doc.contains("p") || !doc["p"].is_number_integer() || doc["p"].get<int>() < 1)
        throw StructuralError("scene field 'p' must be a positive integer");
    std::size_t p = doc["p"].get<std::size_t>();

    DeformationScene scene;
    scene.ring = ring;
    scene.p = p;

    if (!doc.contains("f") || !doc["f"].is_array())
        throw StructuralError("scene field 'f' must be an array of polynomial strings");
    if (doc["f"].size() != p)
        throw StructuralError("scene field 'f' must have length p = " + std::to_string(p) +
                              ", got " + std::to_string(doc["f"].size()));
    for (std::size_t i = 0; i < p; ++i) {
        const auto& e = doc["f"][i];
        if (!e.is_string()) throw StructuralError("scene field 'f' entries must be strings");
        scene.f.push_back(
            parse_field_poly(ring, e.get<std::string>(), "f[" + std::to_string(i) + "]"));
    }

    if (!doc.contains("g") || !doc["g"].is_array())
        throw StructuralError("scene field 'g' must be an array");
    if (doc["g"].size() != p)
        throw StructuralError("scene field 'g' must have length p = " + std::to_string(p) +
                              ", got " + std::to_string(doc["g"].size()));
    for (std::size_t i = 0; i < p; ++i) {
        const auto& e = doc["g"][i];
        std::string field = "g[" + std::to_string(i) + "]";
        if (e.is_string()) {
            scene.g.push_back(Frac(parse_field_poly(ring, e.get<std::string>(), field)));
        } else if (e.is_object()) {
            if (!e.contains("num") || !e.contains("den") || !e["num"].is_string() ||
                !e["den"].is_string())
                throw StructuralError("scene field '" + field +
                                      "' must be {\"num\": string, \"den\": string}");
            Poly num = parse_field_poly(ring, e["num"].get<std::string>(), field + ".num");
            Poly den = parse_field_poly(ring, e["den"].get<std::string>(), field + ".den");
            if (den.is_zero())
                throw StructuralError("scene field '" + field + "' has zero denominator");
            scene.g.emplace_back(std::move(num), std::move(den));
        } else {
            throw StructuralError("scene field '" + field +
                                  "' must be a string or a {num, den} object");
        }
    }

    if (!doc.contains("extension") || !doc["extension"].is_string())
        throw StructuralError("scene field 'extension' must be a polynomial string");
    scene.extension = parse_field_poly(ring, doc["extension"].get<std::string>(), "extension");

    if (doc.contains("labels")) {
        const auto& labels = doc["labels"];
        if (!labels.is_object()) throw StructuralError("scene field 'labels' must be an object");
        if (labels.contains("Y")) {
            if (!labels["Y"].is_string())
                throw StructuralError("scene field 'labels.Y' must be a string");
            scene.label_y = labels["Y"].get<std::string>();
        }
        if (labels.contains("w")) {
            if (!labels["w"].is_string())
                throw StructuralError("scene field 'labels.w' must be a string");
            scene.label_w = labels["w"].get<std::string>();
        }
    }

    if (doc.contains("check_regular")) {
        if (!doc["check_regular"].is_boolean())
            throw StructuralError("scene field 'check_regular' must be a boolean");
        scene.check_regularity = doc["check_regular"].get<bool>();
    }

    return scene;
}

std::string render_scene(const DeformationScene& scene) {
    ordered_json doc;
    doc["variables"] = scene.ring->vars;
    doc["p"] = scene.p;
    ordered_json f = ordered_json::array();
    for (const auto& fi : scene.f) f.push_back(fi.to_string());
    doc["f"] = std::move(f);
    ordered_json g = ordered_json::array();
    for (const auto& gi : scene.g) {
        if (gi.is_polynomial()) {
            g.push_back(gi.num().to_string());
        } else {
            ordered_json entry;
            entry["num"] = gi.num().to_string();
            entry["den"] = gi.den().to_string();
            g.push_back(std::move(entry));
        }
    }
    doc["g"] = std::move(g);
    doc["extension"] = scene.extension.to_string();
    doc["labels"] = ordered_json{{"Y", scene.label_y}, {"w", scene.label_w}};
    doc["check_regular"] = scene.check_regularity;
    return doc.dump();
}

std::string render_frac_json_key(const Frac& f) {
    return f.is_polynomial() ? f.num().to_string() : f.to_string();
}

}  // namespace cyctan
