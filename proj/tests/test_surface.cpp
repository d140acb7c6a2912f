#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conicbundle/errors.hpp"
#include "conicbundle/surface.hpp"

using namespace conicbundle;

namespace {

ConicBundleSpec abstract_spec(int genus, std::vector<CircleData> circles,
                              std::vector<Transformation> transforms = {}) {
    ConicBundleSpec spec;
    spec.base = BaseCurve::abstract(genus, static_cast<int>(circles.size()));
    spec.circles = std::move(circles);
    spec.transformations = std::move(transforms);
    return spec;
}

Transformation elm_real(int component) {
    return {Transformation::Kind::elm_real, component};
}
Transformation blowup_real(int component) {
    return {Transformation::Kind::blowup_real, component};
}

}  // namespace

TEST_CASE("topology basics") {
    CHECK(Topology::sphere().euler_characteristic() == 2);
    CHECK(Topology::torus().euler_characteristic() == 0);
    CHECK(Topology::klein().euler_characteristic() == 0);
    CHECK(Topology::cross_surface(1).euler_characteristic() == 1);
    CHECK(Topology::cross_surface(3).euler_characteristic() == -1);
    CHECK(Topology::sphere().orientable());
    CHECK_FALSE(Topology::klein().orientable());
    CHECK(Topology::klein().is_klein_bottle());
    CHECK(Topology::cross_surface(2).is_klein_bottle());
    CHECK_FALSE(Topology::cross_surface(3).is_klein_bottle());
    CHECK(Topology::klein().crosscap_count() == 2);
    CHECK(Topology::torus().crosscap_count() == 0);
}

TEST_CASE("minimal model from abstract data") {
    // one circle with 4 zeros, one positive zero-free circle
    SurfaceState s = build_minimal_surface(
        abstract_spec(1, {{4, std::nullopt}, {0, 1}}));
    REQUIRE(s.components.size() == 3);
    CHECK(s.components[0].topology == Topology::sphere());
    CHECK(s.components[1].topology == Topology::sphere());
    CHECK(s.components[2].topology == Topology::torus());
    CHECK(s.components[0].circle_index == 0);
    CHECK(s.components[2].circle_index == 1);
    for (const auto& c : s.components) CHECK(c.dominates_circle == (c.topology.kind == Topology::Kind::torus));
    CHECK(s.minimal);
    CHECK_FALSE(s.c_rational);  // genus 1 base
    CHECK(s.section_klein_ids.empty());

    Census census = component_census(s);
    CHECK(census.spheres == 2);
    CHECK(census.tori == 1);
    CHECK(census.klein_bottles == 0);
    CHECK(census.dominating_klein_bottles == 0);
    CHECK(census.orientable_ids.size() == 3);
}

TEST_CASE("negative circles contribute nothing; locus can be empty") {
    SurfaceState s = build_minimal_surface(abstract_spec(2, {{0, -1}, {0, -1}}));
    CHECK(s.empty_real_locus());
    Census census = component_census(s);
    CHECK(census.spheres + census.tori + census.klein_bottles == 0);
}

TEST_CASE("explicit g drives the census") {
    // (z^2 - 1)(z^2 - 4) / (z^4 + 1): 4 zeros on the one circle of P^1
    ConicBundleSpec spec;
    spec.base = BaseCurve::p1();
    spec.explicit_g = RationalFunction::from_int_coeffs({4, 0, -5, 0, 1}, {1, 0, 0, 0, 1});
    SurfaceState s = build_minimal_surface(spec);
    Census census = component_census(s);
    CHECK(census.spheres == 2);
    CHECK(census.tori == 0);
    CHECK(s.c_rational);

    // positive constant g: whole torus over the circle
    ConicBundleSpec torus_spec;
    torus_spec.base = BaseCurve::p1();
    torus_spec.explicit_g = RationalFunction::from_int_coeffs({1}, {1});
    Census torus_census = component_census(build_minimal_surface(torus_spec));
    CHECK(torus_census.spheres == 0);
    CHECK(torus_census.tori == 1);

    // negative constant g: empty locus
    ConicBundleSpec neg_spec;
    neg_spec.base = BaseCurve::p1();
    neg_spec.explicit_g = RationalFunction::from_int_coeffs({-1}, {1});
    CHECK(build_minimal_surface(neg_spec).empty_real_locus());

    // invalid g is rejected
    ConicBundleSpec bad;
    bad.base = BaseCurve::p1();
    bad.explicit_g = RationalFunction::from_int_coeffs({1, 0, 1}, {1});  // pole at infinity
    CHECK_THROWS_AS(build_minimal_surface(bad), InvalidSpec);
}

TEST_CASE("spec validation") {
    // odd zero count
    CHECK_THROWS_AS(build_minimal_surface(abstract_spec(1, {{3, std::nullopt}})), InvalidSpec);
    // zero-free circle without sign
    CHECK_THROWS_AS(build_minimal_surface(abstract_spec(1, {{0, std::nullopt}})), InvalidSpec);
    // sign given together with zeros
    CHECK_THROWS_AS(build_minimal_surface(abstract_spec(1, {{2, 1}})), InvalidSpec);
    // circle count exceeding genus + 1
    CHECK_THROWS_AS(
        build_minimal_surface(abstract_spec(0, {{0, 1}, {0, 1}})), InvalidSpec);
    // explicit g missing for explicit base
    ConicBundleSpec missing;
    missing.base = BaseCurve::p1();
    CHECK_THROWS_AS(build_minimal_surface(missing), InvalidSpec);
}

TEST_CASE("elm on a sphere leaves topology, counts the move") {
    SurfaceState s = build_minimal_surface(abstract_spec(1, {{2, std::nullopt}}));
    REQUIRE(s.components.size() == 1);
    SurfaceState t = apply_elm(s, elm_real(0));
    CHECK(t.components[0].topology == Topology::sphere());
    CHECK(t.components[0].real_elm_count == 1);
    CHECK(t.minimal);
    CHECK(t.section_klein_ids.empty());
}

TEST_CASE("elm flips torus and Klein bottle") {
    SurfaceState s = build_minimal_surface(abstract_spec(1, {{0, 1}}));
    SurfaceState t = apply_elm(s, elm_real(0));
    CHECK(t.components[0].topology == Topology::klein());
    CHECK(t.components[0].dominates_circle);
    CHECK(t.section_klein_ids == std::vector<int>{0});

    SurfaceState back = apply_elm(t, elm_real(0));
    CHECK(back.components[0].topology == Topology::torus());
    CHECK(back.section_klein_ids.empty());
    // Klein -> torus extends the parity rule beyond the minimal model
    bool warned = false;
    for (const auto& w : back.warnings) warned = warned || w.find("parity") != std::string::npos;
    CHECK(warned);
}

TEST_CASE("elm parity over many moves") {
    SurfaceState s = build_minimal_surface(abstract_spec(1, {{0, 1}}));
    for (int n = 1; n <= 20; ++n) {
        s = apply_elm(s, elm_real(0));
        bool expect_klein = (n % 2 == 1);
        CHECK(s.components[0].topology.is_klein_bottle() == expect_klein);
        CHECK(s.components[0].real_elm_count == n);
    }
}

TEST_CASE("conjugate-pair elm is a topological no-op") {
    SurfaceState s = build_minimal_surface(abstract_spec(1, {{2, std::nullopt}, {0, 1}}));
    SurfaceState t = apply_elm(s, {Transformation::Kind::elm_conj_pair, std::nullopt});
    CHECK(t.components.size() == s.components.size());
    for (std::size_t i = 0; i < s.components.size(); ++i)
        CHECK(t.components[i].topology == s.components[i].topology);
    CHECK(t.transform_log.size() == s.transform_log.size() + 1);
}

TEST_CASE("real blow-up adds a crosscap and ends minimality") {
    SurfaceState s = build_minimal_surface(abstract_spec(1, {{2, std::nullopt}, {0, 1}}));

    SurfaceState on_sphere = apply_blowup(s, blowup_real(0));
    CHECK(on_sphere.components[0].topology == Topology::cross_surface(1));
    CHECK(on_sphere.components[0].has_real_exceptional);
    CHECK_FALSE(on_sphere.minimal);

    SurfaceState on_torus = apply_blowup(s, blowup_real(1));
    CHECK(on_torus.components[1].topology == Topology::cross_surface(3));

    SurfaceState again = apply_blowup(on_sphere, blowup_real(0));
    CHECK(again.components[0].topology == Topology::cross_surface(2));
    SurfaceState thrice = apply_blowup(again, blowup_real(0));
    CHECK(thrice.components[0].topology == Topology::cross_surface(3));
}

TEST_CASE("blow-up freezes the section Klein list") {
    // torus -> Klein by elm, then blow up the Klein: topology becomes CS(3)
    // but the frozen list still names the component
    SurfaceState s = build_minimal_surface(abstract_spec(1, {{0, 1}}));
    s = apply_elm(s, elm_real(0));
    CHECK(s.section_klein_ids == std::vector<int>{0});
    SurfaceState b = apply_blowup(s, blowup_real(0));
    CHECK(b.components[0].topology == Topology::cross_surface(3));
    CHECK(b.section_klein_ids == std::vector<int>{0});
    CHECK_FALSE(b.minimal);

    Census census = component_census(b);
    CHECK(census.klein_bottles == 0);
    CHECK(census.dominating_klein_bottles == 0);
}

TEST_CASE("conjugate-pair blow-up only clears minimality") {
    SurfaceState s = build_minimal_surface(abstract_spec(1, {{2, std::nullopt}}));
    SurfaceState t = apply_blowup(s, {Transformation::Kind::blowup_conj_pair, std::nullopt});
    CHECK_FALSE(t.minimal);
    CHECK(t.components[0].topology == Topology::sphere());
    CHECK_FALSE(t.components[0].has_real_exceptional);
}

TEST_CASE("transformations validate their targets") {
    SurfaceState s = build_minimal_surface(abstract_spec(1, {{2, std::nullopt}}));
    CHECK_THROWS_AS(apply_elm(s, elm_real(5)), InvalidSpec);
    CHECK_THROWS_AS(apply_blowup(s, blowup_real(5)), InvalidSpec);
    CHECK_THROWS_AS(apply_elm(s, {Transformation::Kind::elm_real, std::nullopt}), InvalidSpec);
    CHECK_THROWS_AS(apply_elm(s, blowup_real(0)), InvalidSpec);
    CHECK_THROWS_AS(apply_blowup(s, elm_real(0)), InvalidSpec);
}

TEST_CASE("apply_all enforces pipeline order") {
    auto spec = abstract_spec(1, {{2, std::nullopt}},
                              {blowup_real(0), elm_real(0)});
    CHECK_THROWS_AS(apply_all(spec), InvalidSpec);

    auto ordered = abstract_spec(1, {{2, std::nullopt}}, {elm_real(0), blowup_real(0)});
    SurfaceState s = apply_all(ordered);
    CHECK(s.components[0].topology == Topology::cross_surface(1));
    CHECK(s.components[0].real_elm_count == 1);
    CHECK(s.transform_log.size() == 2);
}

TEST_CASE("elm then blow-up interplay on mixed census") {
    // circle A: 2 zeros (1 sphere), circle B: positive (torus)
    auto spec = abstract_spec(1, {{2, std::nullopt}, {0, 1}},
                              {elm_real(1), blowup_real(0)});
    SurfaceState s = apply_all(spec);
    Census census = component_census(s);
    CHECK(census.spheres == 0);  // blown-up sphere is now CS(1)
    CHECK(census.tori == 0);
    CHECK(census.klein_bottles == 1);
    CHECK(census.dominating_klein_bottles == 1);
    CHECK(s.section_klein_ids == std::vector<int>{1});
    CHECK(census.nonorientable_ids.size() == 2);
}
