#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "conicbundle/errors.hpp"
#include "conicbundle/oracle.hpp"
#include "conicbundle/report.hpp"
#include "conicbundle/spec_io.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid_spec = 2;
constexpr int exit_cross_check_mismatch = 3;
constexpr int exit_oracle_disagreement = 4;

struct Options {
    std::string spec_path;
    std::string format = "human";
    int refine_bits = 20;
    std::string map_name;
    int samples = conicbundle::oracle_default_samples;
    int max_samples = conicbundle::oracle_max_samples;
};

void add_common_options(CLI::App* sub, Options& options) {
    sub->add_option("spec", options.spec_path, "path to the spec document")->required();
    sub->add_option("--format", options.format, "output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();
    sub->add_option("--refine-bits", options.refine_bits,
                    "root isolation width 2^-N for the exact zero finder")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw conicbundle::InvalidSpec("cannot read spec file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

conicbundle::SpecDocument load_spec(const Options& options) {
    return conicbundle::parse_spec(read_file(options.spec_path));
}

using nlohmann::ordered_json;

ordered_json group_json(const conicbundle::GroupInvariants& g) {
    ordered_json out;
    out["free_rank"] = g.free_rank;
    ordered_json factors = ordered_json::array();
    for (const auto& f : g.torsion_factors) factors.push_back(conicbundle::to_string(f));
    out["torsion_factors"] = factors;
    out["pretty"] = g.to_string();
    return out;
}

int run_analyze(const Options& options) {
    conicbundle::SpecDocument doc = load_spec(options);
    conicbundle::Report report =
        conicbundle::analyze(doc, conicbundle::isolation_width_from_bits(options.refine_bits));
    if (options.format == "json") {
        std::cout << conicbundle::render_json(report);
    } else {
        std::cout << conicbundle::render_human(report);
    }
    return report.gamma.matches ? exit_ok : exit_cross_check_mismatch;
}

int run_gamma(const Options& options) {
    conicbundle::SpecDocument doc = load_spec(options);
    conicbundle::Report report =
        conicbundle::analyze(doc, conicbundle::isolation_width_from_bits(options.refine_bits));
    if (options.format == "json") {
        ordered_json out;
        out["computed"] = group_json(report.gamma.computed);
        out["closed_form"] = group_json(report.gamma.predicted);
        out["matches"] = report.gamma.matches;
        out["c_rational"] = report.gamma.c_rational;
        if (report.catalogue_gamma) out["catalogue"] = group_json(*report.catalogue_gamma);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "Gamma: " << report.gamma.computed.to_string() << "\n";
        std::cout << "closed form: " << report.gamma.predicted.to_string()
                  << (report.gamma.matches ? "   [match]" : "   [MISMATCH]") << "\n";
        if (report.catalogue_gamma) {
            std::cout << "catalogue (declared C-rational kind): "
                      << report.catalogue_gamma->to_string() << "\n";
        }
    }
    return report.gamma.matches ? exit_ok : exit_cross_check_mismatch;
}

int run_approx(const Options& options) {
    conicbundle::SpecDocument doc = load_spec(options);
    conicbundle::Report report =
        conicbundle::analyze(doc, conicbundle::isolation_width_from_bits(options.refine_bits));
    const conicbundle::MapDecisionEntry* entry = nullptr;
    for (const auto& m : report.map_decisions) {
        if (m.name == options.map_name) entry = &m;
    }
    if (entry == nullptr) {
        throw conicbundle::InvalidSpec("the document defines no map named \"" +
                                       options.map_name + "\"");
    }
    if (options.format == "json") {
        ordered_json out;
        out["name"] = entry->name;
        out["pullback"] = entry->pullback;
        out["approximable"] = entry->decision.approximable;
        out["reasons"] = entry->decision.reasons;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << entry->name << ": pullback " << entry->pullback << " -> "
                  << (entry->decision.approximable ? "approximable by regular maps"
                                                   : "NOT approximable by regular maps")
                  << "\n";
        for (const auto& r : entry->decision.reasons) std::cout << "  - " << r << "\n";
    }
    return exit_ok;
}

int run_validate(const Options& options) {
    conicbundle::SpecDocument doc = load_spec(options);
    conicbundle::Report report =
        conicbundle::analyze(doc, conicbundle::isolation_width_from_bits(options.refine_bits));
    if (options.format == "json") {
        ordered_json out;
        out["valid"] = true;
        ordered_json census;
        census["spheres"] = report.census.spheres;
        census["tori"] = report.census.tori;
        census["klein_bottles"] = report.census.klein_bottles;
        census["dominating_klein_bottles"] = report.census.dominating_klein_bottles;
        out["census"] = census;
        out["warnings"] = report.warnings;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "spec is valid\n";
        std::cout << "census: spheres=" << report.census.spheres << " tori=" << report.census.tori
                  << " klein_bottles=" << report.census.klein_bottles
                  << " dominating_klein_bottles=" << report.census.dominating_klein_bottles
                  << "\n";
        for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
    }
    return exit_ok;
}

int run_oracle_check(const Options& options) {
    conicbundle::SpecDocument doc = load_spec(options);
    if (!doc.bundle.explicit_g) {
        throw conicbundle::InvalidSpec("oracle-check needs an explicit g over the p1 base");
    }
    conicbundle::SurfaceState minimal = conicbundle::build_minimal_surface(
        doc.bundle, conicbundle::isolation_width_from_bits(options.refine_bits));
    conicbundle::Census census = conicbundle::component_census(minimal);
    conicbundle::ComponentCount expected{census.spheres, census.tori};
    bool agrees = conicbundle::component_count_agrees(*doc.bundle.explicit_g, expected,
                                                      options.samples, options.max_samples);
    if (options.format == "json") {
        ordered_json out;
        out["symbolic"] = {{"spheres", expected.spheres}, {"tori", expected.tori}};
        out["agrees"] = agrees;
        out["initial_samples"] = options.samples;
        out["max_samples"] = options.max_samples;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "symbolic count: spheres=" << expected.spheres << " tori=" << expected.tori
                  << "\n";
        std::cout << (agrees ? "numeric oracle agrees" : "numeric oracle DISAGREES") << "\n";
    }
    return agrees ? exit_ok : exit_oracle_disagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Analyzer for real conic bundle surfaces: real-locus topology, the algebraic part of "
        "H^2, the obstruction group Gamma, and approximability of smooth maps by regular maps"};
    app.require_subcommand(1);

    Options options;
    CLI::App* analyze = app.add_subcommand("analyze", "full report for a spec document");
    add_common_options(analyze, options);
    CLI::App* gamma = app.add_subcommand("gamma", "the obstruction group only");
    add_common_options(gamma, options);
    CLI::App* approx =
        app.add_subcommand("approx", "approximability decision for one named map");
    add_common_options(approx, options);
    approx->add_option("--map", options.map_name, "name of the map to decide")->required();
    CLI::App* validate = app.add_subcommand("validate", "schema and model validation only");
    add_common_options(validate, options);
    CLI::App* oracle_check = app.add_subcommand(
        "oracle-check", "compare the exact topology builder with the floating-point oracle");
    add_common_options(oracle_check, options);
    oracle_check
        ->add_option("--samples", options.samples, "initial grid size for the numeric oracle")
        ->check(CLI::Range(256, conicbundle::oracle_max_samples))
        ->capture_default_str();
    oracle_check
        ->add_option("--max-samples", options.max_samples,
                     "refinement cap for the numeric oracle")
        ->check(CLI::Range(256, conicbundle::oracle_max_samples))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(options);
        if (gamma->parsed()) return run_gamma(options);
        if (approx->parsed()) return run_approx(options);
        if (validate->parsed()) return run_validate(options);
        if (oracle_check->parsed()) return run_oracle_check(options);
    } catch (const conicbundle::SpecParseError& e) {
        std::cerr << "invalid spec:\n";
        for (const auto& err : e.errors()) {
            std::cerr << "  " << (err.location.empty() ? "/" : err.location) << ": "
                      << err.message << "\n";
        }
        return exit_invalid_spec;
    } catch (const conicbundle::InvalidSpec& e) {
        std::cerr << "invalid spec: " << e.what() << "\n";
        return exit_invalid_spec;
    } catch (const conicbundle::InvalidInput& e) {
        std::cerr << "invalid spec: " << e.what() << "\n";
        return exit_invalid_spec;
    } catch (const conicbundle::OracleInconclusive& e) {
        std::cerr << "oracle inconclusive: " << e.what() << "\n";
        return exit_oracle_disagreement;
    }
    return exit_ok;
}
