#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "conicbundle/errors.hpp"
#include "conicbundle/report.hpp"

using namespace conicbundle;

namespace {

const char* kMixedDoc = R"({
  "schema_version": "1",
  "base": {"kind": "abstract", "genus": 1, "real_circles": 2},
  "g": {"abstract": [{"zeros": 4}, {"zeros": 0, "sign": "+"}]},
  "maps": [
    {"name": "torus_degree_one", "degrees": {"2": "1"}},
    {"name": "sphere_degree_seven", "degrees": {"0": "7"}}
  ],
  "rational_targets": [{"name": "to_sphere", "topology": "sphere"}]
})";

const char* kWorkedDoc = R"({
  "schema_version": "1",
  "base": {"kind": "p1"},
  "g": {"explicit": {"numerator": ["4", "0", "-5", "0", "1"],
                     "denominator": ["1", "0", "0", "0", "1"]}}
})";

}  // namespace

TEST_CASE("analysis of the mixed abstract document") {
    Report r = analyze(parse_spec(kMixedDoc));
    CHECK(r.census.spheres == 2);
    CHECK(r.census.tori == 1);
    CHECK(r.census.klein_bottles == 0);
    CHECK(r.gamma.computed == GroupInvariants::free_of_rank(1));
    CHECK(r.gamma.matches);
    CHECK_FALSE(r.gamma.c_rational);
    CHECK(r.generators.size() == 2);
    CHECK(r.canonical_class_vanishes);
    CHECK_FALSE(r.catalogue_gamma.has_value());

    REQUIRE(r.map_decisions.size() == 2);
    CHECK(r.map_decisions[0].name == "torus_degree_one");
    CHECK_FALSE(r.map_decisions[0].decision.approximable);
    CHECK_FALSE(r.map_decisions[0].decision.reasons.empty());
    CHECK(r.map_decisions[1].name == "sphere_degree_seven");
    CHECK(r.map_decisions[1].decision.approximable);
    CHECK(r.map_decisions[1].pullback == "7*eta[0]");

    REQUIRE(r.target_decisions.size() == 1);
    const TargetDecisionEntry& t = r.target_decisions[0];
    CHECK(t.name == "to_sphere");
    REQUIRE(t.per_component.size() == 3);
    // spheres: dense; torus into sphere: the exception
    CHECK(t.per_component[0].decision.density == Density::dense);
    CHECK(t.per_component[1].decision.density == Density::dense);
    CHECK(t.per_component[2].decision.density == Density::closure_null_homotopic);
}

TEST_CASE("analysis of the explicit worked example") {
    Report r = analyze(parse_spec(kWorkedDoc));
    CHECK(r.census.spheres == 2);
    CHECK(r.census.tori == 0);
    CHECK(r.gamma.c_rational);
    // two spheres, no tori, no Kleins: the generators span the whole lattice
    CHECK(r.gamma.computed.is_trivial());
    CHECK(r.gamma.matches);
}

TEST_CASE("unknown map component surfaces as an invalid spec") {
    const char* doc = R"({
      "schema_version": "1",
      "base": {"kind": "abstract", "genus": 1, "real_circles": 1},
      "g": {"abstract": [{"zeros": 2}]},
      "maps": [{"name": "m", "degrees": {"5": "1"}}]
    })";
    CHECK_THROWS_AS(analyze(parse_spec(doc)), InvalidSpec);
}

TEST_CASE("declared catalogue kind is reported with consistency warnings") {
    const char* torus_doc = R"({
      "schema_version": "1",
      "base": {"kind": "p1"},
      "g": {"explicit": {"numerator": ["1"], "denominator": ["1"]}},
      "c_rational_kind": "torus_model"
    })";
    Report r = analyze(parse_spec(torus_doc));
    REQUIRE(r.catalogue_gamma.has_value());
    CHECK(*r.catalogue_gamma == GroupInvariants::free_of_rank(1));
    CHECK(r.census.tori == 1);

    // declaration inconsistent with the census: keep the catalogue value but warn
    const char* mismatched = R"({
      "schema_version": "1",
      "base": {"kind": "p1"},
      "g": {"explicit": {"numerator": ["-1"], "denominator": ["1"]}},
      "c_rational_kind": "torus_model"
    })";
    Report m = analyze(parse_spec(mismatched));
    REQUIRE(m.catalogue_gamma.has_value());
    bool warned = false;
    for (const auto& w : m.warnings) warned = warned || w.find("torus") != std::string::npos;
    CHECK(warned);

    // genus >= 1 base: the declaration is ignored with a warning
    const char* nonrational = R"({
      "schema_version": "1",
      "base": {"kind": "abstract", "genus": 1, "real_circles": 1},
      "g": {"abstract": [{"zeros": 2}]},
      "c_rational_kind": "torus_model"
    })";
    Report n = analyze(parse_spec(nonrational));
    CHECK_FALSE(n.catalogue_gamma.has_value());
    bool ignored = false;
    for (const auto& w : n.warnings) ignored = ignored || w.find("ignore") != std::string::npos;
    CHECK(ignored);
}

TEST_CASE("empty real locus is reported, not an error") {
    const char* doc = R"({
      "schema_version": "1",
      "base": {"kind": "p1"},
      "g": {"explicit": {"numerator": ["-1"], "denominator": ["1"]}}
    })";
    Report r = analyze(parse_spec(doc));
    CHECK(r.state.empty_real_locus());
    CHECK(r.gamma.computed.is_trivial());
    CHECK(r.gamma.matches);
    bool noted = false;
    for (const auto& w : r.warnings) noted = noted || w.find("empty") != std::string::npos;
    CHECK(noted);
}

TEST_CASE("human rendering carries every section") {
    Report r = analyze(parse_spec(kMixedDoc));
    std::string text = render_human(r);
    for (const char* needle :
         {"base", "components", "census", "Gamma", "Z", "generators", "eta[0]",
          "torus_degree_one", "sphere_degree_seven", "to_sphere", "canonical"}) {
        INFO("missing: " << needle);
        CHECK(text.find(needle) != std::string::npos);
    }
    CHECK(text.find("[match]") != std::string::npos);
}

TEST_CASE("json rendering is deterministic and structured") {
    Report r = analyze(parse_spec(kMixedDoc));
    std::string a = render_json(r);
    std::string b = render_json(analyze(parse_spec(kMixedDoc)));
    CHECK(a == b);
    for (const char* needle :
         {"\"schema_version\"", "\"census\"", "\"gamma\"", "\"computed\"", "\"closed_form\"",
          "\"matches\": true", "\"maps\"", "\"rational_targets\"", "\"canonical_class_vanishes\""}) {
        INFO("missing: " << needle);
        CHECK(a.find(needle) != std::string::npos);
    }
    // degrees and group data are strings in the machine form
    CHECK(a.find("\"free_rank\"") != std::string::npos);
}

TEST_CASE("gamma values agree across render forms") {
    Report r = analyze(parse_spec(kWorkedDoc));
    std::string human = render_human(r);
    std::string machine = render_json(r);
    CHECK(human.find("Gamma: 0") != std::string::npos);
    CHECK(human.find("cohomology lattice: Z^2") != std::string::npos);
    CHECK(machine.find("\"pretty\": \"0\"") != std::string::npos);

    Report mixed = analyze(parse_spec(kMixedDoc));
    CHECK(render_human(mixed).find("Gamma: Z\n") != std::string::npos);
    CHECK(render_json(mixed).find("\"pretty\": \"Z\"") != std::string::npos);
}
