#pragma once

#include <string>

#include "cyctan/tangent.hpp"

namespace cyctan {

/// Parses a scene document (UTF-8 JSON) into a DeformationScene.
/// Keys: "variables", "p", "f", "g" (polynomial strings or {"num","den"}
/// objects), "extension", optional "labels" {"Y","w"}, optional
/// "check_regular". Diagnostics name the offending field and, for grammar
/// errors, the character offset.
DeformationScene parse_scene(const std::string& text);

/// Canonical JSON rendering of a scene; parse(render(s)) round-trips
/// byte-identically.
std::string render_scene(const DeformationScene& scene);

/// Human/machine readable rendering helpers used by the CLI.
std::string render_frac_json_key(const Frac& f);

}  // namespace cyctan
