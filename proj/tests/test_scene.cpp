#include <doctest.h>

#include "cyctan/scene.hpp"
#include "test_util.hpp"

using namespace cyctan;

namespace {

const char* kExample42 = R"({
  "variables": ["x1", "x2", "x3"],
  "p": 2,
  "f": ["x1", "x2"],
  "g": [{"num": "1", "den": "x3"}, "0"],
  "extension": "x3"
})";

}  // namespace

TEST_SUITE("scene") {
    TEST_CASE("parses the running example") {
        DeformationScene s = parse_scene(kExample42);
        CHECK(s.p == 2);
        CHECK(s.ring->vars == std::vector<std::string>{"x1", "x2", "x3"});
        CHECK(s.f[0] == parse_poly(s.ring, "x1"));
        CHECK(s.g[0] == Frac(parse_poly(s.ring, "1"), parse_poly(s.ring, "x3")));
        CHECK(s.g[1].is_zero());
        CHECK(s.extension == parse_poly(s.ring, "x3"));
        CHECK(s.label_y == "Y");
        CHECK(s.label_w == "w");
        CHECK(s.check_regularity);

        LocalCohClass c = pi(s);
        CHECK(!c.numerator().is_zero());
    }

    TEST_CASE("length mismatches are named") {
        const char* bad = R"({"variables": ["x1", "x2", "x3"], "p": 2,
                              "f": ["x1", "x2", "x3"], "g": ["0", "0"],
                              "extension": "x3"})";
        CHECK_THROWS_WITH_AS(parse_scene(bad), doctest::Contains("'f'"), StructuralError);
    }

    TEST_CASE("grammar errors carry the field and offset") {
        const char* bad = R"({"variables": ["x1"], "p": 1, "f": ["3/0"],
                              "g": ["0"], "extension": "x1"})";
        try {
            parse_scene(bad);
            CHECK(false);
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("f[0]") != std::string::npos);
        }
    }

    TEST_CASE("malformed JSON is a parse error") {
        CHECK_THROWS_AS(parse_scene("{ not json"), ParseError);
    }

    TEST_CASE("render round trip is byte identical") {
        DeformationScene s = parse_scene(kExample42);
        std::string canonical = render_scene(s);
        DeformationScene reparsed = parse_scene(canonical);
        CHECK(render_scene(reparsed) == canonical);

        // and semantic fields survive
        CHECK(reparsed.f == s.f);
        CHECK(reparsed.g == s.g);
        CHECK(reparsed.extension == s.extension);
    }

    TEST_CASE("labels and flags are honored") {
        const char* doc = R"({"variables": ["x1", "x2"], "p": 1, "f": ["x1"],
                              "g": ["x2"], "extension": "x2",
                              "labels": {"Y": "curve", "w": "pt"},
                              "check_regular": false})";
        DeformationScene s = parse_scene(doc);
        CHECK(s.label_y == "curve");
        CHECK(s.label_w == "pt");
        CHECK(!s.check_regularity);
        CHECK(pi(s).point() == "curve");
    }
}
