#include "conicbundle/report.hpp"

#include <json.hpp>

#include <utility>

#include "conicbundle/errors.hpp"

namespace conicbundle {

namespace {

void collect_warnings(const SpecDocument& doc, Report& report) {
    const SurfaceState& state = report.state;
    for (const auto& w : state.warnings) report.warnings.push_back(w);

    if (state.empty_real_locus()) {
        report.warnings.push_back(
            "the real locus is empty: every group in this report is trivial");
    }
    if (state.c_rational) {
        report.warnings.push_back(
            "the base is rational, so the surface is C-rational: the conic-bundle closed form "
            "for Gamma describes only the subgroup generated here; the catalogue of C-rational "
            "models is authoritative where it applies");
        if (!state.minimal) {
            report.warnings.push_back(
                "blow-ups over a rational base can create algebraic classes beyond the "
                "generated list; the reported subgroup is a lower bound");
        }
    }
    if (!report.canonical_class_vanishes) {
        for (const auto& c : state.components) {
            if (!c.topology.orientable() && c.topology.crosscap_count() % 2 != 0) {
                report.warnings.push_back(
                    "component " + std::to_string(c.id) + " (" + c.topology.name() +
                    ") has odd Euler characteristic: the canonical class restricts "
                    "nontrivially, which cannot happen on a minimal conic bundle");
            }
        }
    }
    if (!report.gamma.matches) {
        report.warnings.push_back(
            "internal cross-check failed: the Smith-computed Gamma differs from the census "
            "closed form");
    }
    if (doc.c_rational_kind && !state.c_rational) {
        report.warnings.push_back(
            "a C-rational kind is declared but the base has genus >= 1; the catalogue entry "
            "is ignored");
    }
}

void apply_catalogue(const SpecDocument& doc, Report& report) {
    if (!doc.c_rational_kind || !report.state.c_rational) return;
    CRationalSurfaceKind kind;
    switch (*doc.c_rational_kind) {
        case CRationalSurfaceKind::Kind::torus_model:
            kind = CRationalSurfaceKind::torus_model();
            if (report.census.tori != 1 ||
                static_cast<int>(report.state.components.size()) != 1) {
                report.warnings.push_back(
                    "declared kind torus_model, but the computed real locus is not a single "
                    "torus; the catalogue value assumes the declaration");
            }
            break;
        case CRationalSurfaceKind::Kind::maximal_del_pezzo_degree_2:
            kind = CRationalSurfaceKind::maximal_del_pezzo_degree_2();
            if (report.census.spheres != 4 ||
                static_cast<int>(report.state.components.size()) != 4) {
                report.warnings.push_back(
                    "declared kind maximal_del_pezzo_degree_2, but the computed real locus is "
                    "not four spheres; the catalogue value assumes the declaration");
            }
            break;
        case CRationalSurfaceKind::Kind::other: {
            std::vector<ClosedSurface> components;
            for (const auto& c : report.state.components) {
                components.push_back(closed_surface_of(c.topology));
            }
            kind = CRationalSurfaceKind::other(std::move(components));
            break;
        }
    }
    report.catalogue_gamma = gamma_c_rational(kind);
}

}  // namespace

Report analyze(const SpecDocument& doc) { return analyze(doc, default_isolation_width()); }

Report analyze(const SpecDocument& doc, const Rational& isolation_width) {
    Report report;
    report.state = apply_all(doc.bundle, isolation_width);
    report.census = component_census(report.state);
    report.gamma = gamma(report.state);
    CohomologyLattice lattice = lattice_of(report.state);
    for (const auto& g : algebraic_generators(report.state)) {
        report.generators.push_back(to_string(lattice, g));
    }
    report.ns_restrictions = ns_restriction_table(report.state);
    report.canonical_class_vanishes = conicbundle::canonical_class_vanishes(report.state);

    for (const auto& m : doc.maps) {
        MapDecisionEntry entry;
        entry.name = m.name;
        try {
            entry.pullback = to_string(lattice, to_lattice_element(report.state, m.map));
            entry.decision = decide_approx_sphere(report.state, m.map);
        } catch (const InvalidInput& e) {
            throw InvalidSpec("map \"" + m.name + "\": " + e.what());
        }
        report.map_decisions.push_back(std::move(entry));
    }

    for (const auto& t : doc.rational_targets) {
        TargetDecisionEntry entry;
        entry.name = t.name;
        entry.target = t.target.topology.name();
        for (const auto& c : report.state.components) {
            TargetDecisionEntry::PerComponent row;
            row.component_id = c.id;
            ClosedSurface source = closed_surface_of(c.topology);
            row.source = source.name();
            row.decision = decide_approx_rational_target(source, t.target);
            entry.per_component.push_back(std::move(row));
        }
        report.target_decisions.push_back(std::move(entry));
    }

    apply_catalogue(doc, report);
    collect_warnings(doc, report);
    return report;
}

namespace {

std::string describe_base(const BaseCurve& base) {
    if (base.kind == BaseCurve::Kind::explicit_p1) return "P^1 (explicit g)";
    return "abstract curve of genus " + std::to_string(base.genus) + " with " +
           std::to_string(base.real_circle_count) +
           (base.real_circle_count == 1 ? " real circle" : " real circles");
}

std::string describe_component(const RealComponent& c) {
    std::string out = "id " + std::to_string(c.id) + ": " + c.topology.name() + " (circle " +
                      std::to_string(c.circle_index);
    if (c.dominates_circle) out += ", dominates";
    out += ")";
    if (c.real_elm_count > 0) out += " [elm x" + std::to_string(c.real_elm_count) + "]";
    if (c.has_real_exceptional) out += " [real exceptional curve]";
    return out;
}

std::string describe_lattice(const CohomologyLattice& lattice) {
    if (lattice.dimension() == 0) return "0";
    std::string out;
    if (lattice.free_rank() == 1) out = "Z";
    if (lattice.free_rank() > 1) out = "Z^" + std::to_string(lattice.free_rank());
    if (lattice.torsion_rank() > 0) {
        if (!out.empty()) out += " x ";
        out += lattice.torsion_rank() == 1
                   ? "Z/2"
                   : "(Z/2)^" + std::to_string(lattice.torsion_rank());
    }
    return out;
}

}  // namespace

std::string render_human(const Report& report) {
    std::string out;
    out += "base: " + describe_base(report.state.base) + "\n";

    out += "components (" + std::to_string(report.state.components.size()) + "):\n";
    if (report.state.components.empty()) out += "  (empty real locus)\n";
    for (const auto& c : report.state.components) {
        out += "  " + describe_component(c) + "\n";
    }

    out += "census: spheres=" + std::to_string(report.census.spheres) +
           " tori=" + std::to_string(report.census.tori) +
           " klein_bottles=" + std::to_string(report.census.klein_bottles) +
           " dominating_klein_bottles=" + std::to_string(report.census.dominating_klein_bottles) +
           "\n";

    CohomologyLattice lattice = lattice_of(report.state);
    out += "cohomology lattice: " + describe_lattice(lattice) + "\n";

    out += "algebraic subgroup generators (" + std::to_string(report.generators.size()) + "):\n";
    for (const auto& g : report.generators) out += "  " + g + "\n";

    out += "Neron-Severi restriction images:\n";
    for (const auto& row : report.ns_restrictions.rows) {
        out += "  " + row.symbol + " -> " + to_string(lattice, row.image);
        if (!row.note.empty()) out += "   (" + row.note + ")";
        out += "\n";
    }

    out += "Gamma: " + report.gamma.computed.to_string() + "\n";
    out += "  closed form: " + report.gamma.predicted.to_string() +
           (report.gamma.matches ? "   [match]" : "   [MISMATCH]") + "\n";
    if (report.catalogue_gamma) {
        out += "  catalogue (declared C-rational kind): " + report.catalogue_gamma->to_string() +
               "\n";
    }

    out += std::string("canonical class restriction vanishes: ") +
           (report.canonical_class_vanishes ? "yes" : "no") + "\n";

    if (!report.map_decisions.empty()) {
        out += "maps to the sphere:\n";
        for (const auto& m : report.map_decisions) {
            out += "  " + m.name + ": pullback " + m.pullback + " -> " +
                   (m.decision.approximable ? "approximable by regular maps"
                                            : "NOT approximable by regular maps") +
                   "\n";
            for (const auto& r : m.decision.reasons) out += "    - " + r + "\n";
        }
    }

    if (!report.target_decisions.empty()) {
        out += "rational targets:\n";
        for (const auto& t : report.target_decisions) {
            out += "  " + t.name + " (" + t.target + "):\n";
            if (t.per_component.empty()) out += "    (no real components to map from)\n";
            for (const auto& row : t.per_component) {
                out += "    component " + std::to_string(row.component_id) + " (" + row.source +
                       "): ";
                out += row.decision.density == Density::dense
                           ? "regular maps are dense"
                           : "closure of the regular maps = null homotopic maps";
                out += "\n";
            }
        }
    }

    if (!report.warnings.empty()) {
        out += "warnings:\n";
        for (const auto& w : report.warnings) out += "  - " + w + "\n";
    }
    return out;
}

namespace {

using nlohmann::ordered_json;

ordered_json json_of(const GroupInvariants& g) {
    ordered_json out;
    out["free_rank"] = g.free_rank;
    ordered_json factors = ordered_json::array();
    for (const auto& f : g.torsion_factors) factors.push_back(to_string(f));
    out["torsion_factors"] = factors;
    out["pretty"] = g.to_string();
    return out;
}

}  // namespace

std::string render_json(const Report& report) {
    ordered_json root;
    root["schema_version"] = "1";

    ordered_json base;
    if (report.state.base.kind == BaseCurve::Kind::explicit_p1) {
        base["kind"] = "p1";
    } else {
        base["kind"] = "abstract";
        base["genus"] = report.state.base.genus;
        base["real_circles"] = report.state.base.real_circle_count;
    }
    root["base"] = base;

    ordered_json components = ordered_json::array();
    for (const auto& c : report.state.components) {
        ordered_json entry;
        entry["id"] = c.id;
        entry["topology"] = c.topology.name();
        entry["orientable"] = c.topology.orientable();
        entry["euler_characteristic"] = c.topology.euler_characteristic();
        entry["circle"] = c.circle_index;
        entry["dominates_circle"] = c.dominates_circle;
        entry["real_elm_count"] = c.real_elm_count;
        entry["has_real_exceptional"] = c.has_real_exceptional;
        components.push_back(entry);
    }
    root["components"] = components;

    ordered_json census;
    census["spheres"] = report.census.spheres;
    census["tori"] = report.census.tori;
    census["klein_bottles"] = report.census.klein_bottles;
    census["dominating_klein_bottles"] = report.census.dominating_klein_bottles;
    root["census"] = census;

    CohomologyLattice lattice = lattice_of(report.state);
    ordered_json lattice_json;
    lattice_json["free_slots"] = lattice.free_slots;
    lattice_json["torsion_slots"] = lattice.torsion_slots;
    root["lattice"] = lattice_json;

    root["algebraic_generators"] = report.generators;

    ordered_json ns = ordered_json::array();
    for (const auto& row : report.ns_restrictions.rows) {
        ordered_json entry;
        entry["symbol"] = row.symbol;
        entry["image"] = to_string(lattice, row.image);
        entry["note"] = row.note;
        ns.push_back(entry);
    }
    root["ns_restrictions"] = ns;

    ordered_json gamma_json;
    gamma_json["computed"] = json_of(report.gamma.computed);
    gamma_json["closed_form"] = json_of(report.gamma.predicted);
    gamma_json["matches"] = report.gamma.matches;
    gamma_json["c_rational"] = report.gamma.c_rational;
    root["gamma"] = gamma_json;
    if (report.catalogue_gamma) root["catalogue_gamma"] = json_of(*report.catalogue_gamma);

    root["canonical_class_vanishes"] = report.canonical_class_vanishes;

    ordered_json maps = ordered_json::array();
    for (const auto& m : report.map_decisions) {
        ordered_json entry;
        entry["name"] = m.name;
        entry["pullback"] = m.pullback;
        entry["approximable"] = m.decision.approximable;
        entry["reasons"] = m.decision.reasons;
        maps.push_back(entry);
    }
    root["maps"] = maps;

    ordered_json targets = ordered_json::array();
    for (const auto& t : report.target_decisions) {
        ordered_json entry;
        entry["name"] = t.name;
        entry["topology"] = t.target;
        ordered_json decisions = ordered_json::array();
        for (const auto& row : t.per_component) {
            ordered_json d;
            d["component"] = row.component_id;
            d["source"] = row.source;
            d["decision"] = row.decision.density == Density::dense ? "dense"
                                                                   : "closure_null_homotopic";
            d["reason"] = row.decision.reason;
            decisions.push_back(d);
        }
        entry["decisions"] = decisions;
        targets.push_back(entry);
    }
    root["rational_targets"] = targets;

    root["warnings"] = report.warnings;

    return root.dump(2) + "\n";
}

}  // namespace conicbundle
