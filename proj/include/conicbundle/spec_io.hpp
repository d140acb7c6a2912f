#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conicbundle/decide.hpp"
#include "conicbundle/surface.hpp"

namespace conicbundle {

struct NamedMap {
    std::string name;
    MapDescriptor map;
    bool operator==(const NamedMap&) const = default;
};

struct NamedTarget {
    std::string name;
    RationalTargetDescriptor target;
    bool operator==(const NamedTarget&) const = default;
};

// Schema-validated input document: the bundle data plus optional named maps,
// rational targets, and a declared C-rational classification.
struct SpecDocument {
    std::string schema_version = "1";
    ConicBundleSpec bundle;
    std::vector<NamedMap> maps;
    std::vector<NamedTarget> rational_targets;
    std::optional<CRationalSurfaceKind::Kind> c_rational_kind;

    bool operator==(const SpecDocument&) const = default;
};

// Parses and validates a JSON spec document. Collects every schema error,
// each tagged with a JSON-pointer style location, and fails with
// SpecParseError listing all of them.
SpecDocument parse_spec(const std::string& text);

// Canonical serialization: fixed key order, arithmetic data as strings.
// parse_spec(serialize_spec(d)) == d.
std::string serialize_spec(const SpecDocument& doc);

}  // namespace conicbundle
