#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conicbundle/decide.hpp"
#include "conicbundle/lattice.hpp"
#include "conicbundle/spec_io.hpp"
#include "conicbundle/surface.hpp"

namespace conicbundle {

struct MapDecisionEntry {
    std::string name;
    std::string pullback;  // printable lattice element
    Decision decision;
};

struct TargetDecisionEntry {
    struct PerComponent {
        int component_id = 0;
        std::string source;  // printable source surface
        RationalTargetDecision decision;
    };
    std::string name;
    std::string target;  // printable target surface
    std::vector<PerComponent> per_component;
};

// Everything the CLI prints: the component table and census, the two Gamma
// values with their match flag, the algebraic generator list, the
// Neron-Severi restriction images, per-map and per-target decisions, and
// warnings.
struct Report {
    SurfaceState state;
    Census census;
    GammaResult gamma;
    std::vector<std::string> generators;
    NSRestrictionTable ns_restrictions;
    bool canonical_class_vanishes = false;
    std::vector<MapDecisionEntry> map_decisions;
    std::vector<TargetDecisionEntry> target_decisions;
    // catalogue value when the document declares a C-rational kind
    std::optional<GroupInvariants> catalogue_gamma;
    std::vector<std::string> warnings;
};

Report analyze(const SpecDocument& doc);
Report analyze(const SpecDocument& doc, const Rational& isolation_width);

std::string render_human(const Report& report);
// Machine form; byte-identical for identical inputs.
std::string render_json(const Report& report);

}  // namespace conicbundle
