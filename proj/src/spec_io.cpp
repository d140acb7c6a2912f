#include "conicbundle/spec_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <utility>

#include "conicbundle/errors.hpp"
#include "conicbundle/rational.hpp"

namespace conicbundle {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct Collector {
    std::vector<SchemaError> errors;
    void add(std::string location, std::string message) {
        errors.push_back({std::move(location), std::move(message)});
    }
};

void check_keys(const json& j, const std::string& loc,
                std::initializer_list<const char*> allowed, Collector& c) {
    for (const auto& item : j.items()) {
        bool known = std::any_of(allowed.begin(), allowed.end(),
                                 [&item](const char* a) { return item.key() == a; });
        if (!known) c.add(loc + "/" + item.key(), "unknown key");
    }
}

const json* require(const json& j, const char* key, const std::string& loc, Collector& c) {
    if (!j.contains(key)) {
        c.add(loc + "/" + key, "required key missing");
        return nullptr;
    }
    return &j.at(key);
}

std::optional<std::string> as_string(const json& j, const std::string& loc, Collector& c) {
    if (!j.is_string()) {
        c.add(loc, "expected a string");
        return std::nullopt;
    }
    return j.get<std::string>();
}

// Arithmetic data: a JSON integer or an exact number string like "7" or
// "-3/2"; the string form preserves exactness at any size.
std::optional<Rational> as_rational(const json& j, const std::string& loc, Collector& c) {
    try {
        if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
        if (j.is_string()) return rational_from_string(j.get<std::string>());
    } catch (const InvalidInput& e) {
        c.add(loc, e.what());
        return std::nullopt;
    }
    c.add(loc, "expected an integer or an exact number string");
    return std::nullopt;
}

std::optional<long long> as_integer(const json& j, const std::string& loc, Collector& c) {
    if (j.is_number_integer()) return j.get<long long>();
    if (j.is_string()) {
        std::optional<Rational> r = as_rational(j, loc, c);
        if (!r) return std::nullopt;
        if (r->get_den() != 1) {
            c.add(loc, "expected an integer, got a fraction");
            return std::nullopt;
        }
        if (!r->get_num().fits_slong_p()) {
            c.add(loc, "integer out of range");
            return std::nullopt;
        }
        return static_cast<long long>(r->get_num().get_si());
    }
    c.add(loc, "expected an integer or an integer string");
    return std::nullopt;
}

std::optional<int> as_sign(const json& j, const std::string& loc, Collector& c) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "+") return 1;
        if (s == "-") return -1;
    } else if (j.is_number_integer()) {
        long long v = j.get<long long>();
        if (v == 1) return 1;
        if (v == -1) return -1;
    }
    c.add(loc, "expected \"+\", \"-\", 1, or -1");
    return std::nullopt;
}

std::optional<Polynomial> as_polynomial(const json& j, const std::string& loc, Collector& c) {
    if (!j.is_array() || j.empty()) {
        c.add(loc, "expected a nonempty coefficient array in ascending powers");
        return std::nullopt;
    }
    std::vector<Rational> coeffs;
    bool ok = true;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::optional<Rational> r = as_rational(j[i], loc + "/" + std::to_string(i), c);
        if (r) {
            coeffs.push_back(std::move(*r));
        } else {
            ok = false;
        }
    }
    if (!ok) return std::nullopt;
    return Polynomial(std::move(coeffs));
}

void parse_base(const json& j, const std::string& loc, SpecDocument& doc, Collector& c) {
    if (!j.is_object()) {
        c.add(loc, "expected an object");
        return;
    }
    const json* kind = require(j, "kind", loc, c);
    if (!kind) return;
    std::optional<std::string> name = as_string(*kind, loc + "/kind", c);
    if (!name) return;
    if (*name == "p1") {
        check_keys(j, loc, {"kind"}, c);
        doc.bundle.base = BaseCurve::p1();
    } else if (*name == "abstract") {
        check_keys(j, loc, {"kind", "genus", "real_circles"}, c);
        const json* genus = require(j, "genus", loc, c);
        const json* circles = require(j, "real_circles", loc, c);
        long long g = 0;
        long long n = 0;
        if (genus) {
            if (auto v = as_integer(*genus, loc + "/genus", c)) g = *v;
        }
        if (circles) {
            if (auto v = as_integer(*circles, loc + "/real_circles", c)) n = *v;
        }
        if (g < 0) c.add(loc + "/genus", "genus must be non-negative");
        if (n < 0) c.add(loc + "/real_circles", "circle count must be non-negative");
        if (g >= 0 && n >= 0 && n > g + 1) {
            c.add(loc + "/real_circles",
                  "a real curve of genus g has at most g+1 circles");
        }
        doc.bundle.base = BaseCurve::abstract(static_cast<int>(g), static_cast<int>(n));
    } else {
        c.add(loc + "/kind", "unknown base kind; use \"p1\" or \"abstract\"");
    }
}

void parse_explicit_g(const json& j, const std::string& loc, SpecDocument& doc, Collector& c) {
    if (!j.is_object()) {
        c.add(loc, "expected an object");
        return;
    }
    check_keys(j, loc, {"numerator", "denominator"}, c);
    const json* num = require(j, "numerator", loc, c);
    const json* den = require(j, "denominator", loc, c);
    std::optional<Polynomial> n, d;
    if (num) n = as_polynomial(*num, loc + "/numerator", c);
    if (den) d = as_polynomial(*den, loc + "/denominator", c);
    if (d && d->is_zero()) {
        c.add(loc + "/denominator", "denominator is the zero polynomial");
        return;
    }
    if (n && n->is_zero()) {
        c.add(loc + "/numerator", "g must not be the zero function");
        return;
    }
    if (n && d) doc.bundle.explicit_g = RationalFunction(std::move(*n), std::move(*d));
}

void parse_abstract_g(const json& j, const std::string& loc, SpecDocument& doc, Collector& c) {
    if (!j.is_array()) {
        c.add(loc, "expected an array of circle entries");
        return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string at = loc + "/" + std::to_string(i);
        const json& entry = j[i];
        CircleData circle;
        if (!entry.is_object()) {
            c.add(at, "expected an object");
            doc.bundle.circles.push_back(circle);
            continue;
        }
        check_keys(entry, at, {"zeros", "sign"}, c);
        const json* zeros = require(entry, "zeros", at, c);
        std::optional<long long> zero_count;
        if (zeros) {
            if (auto v = as_integer(*zeros, at + "/zeros", c)) {
                if (*v < 0) {
                    c.add(at + "/zeros", "zero count must be non-negative");
                } else if (*v % 2 != 0) {
                    c.add(at + "/zeros",
                          "odd zero count; the number of real zeros of g on a circle is even");
                } else {
                    circle.zeros = static_cast<int>(*v);
                    zero_count = *v;
                }
            }
        }
        bool has_sign = entry.contains("sign");
        if (zero_count) {
            if (*zero_count == 0 && !has_sign) {
                c.add(at + "/sign", "a zero-free circle needs the sign of g");
            }
            if (*zero_count > 0 && has_sign) {
                c.add(at + "/sign", "a circle with zeros has no constant sign");
            }
        }
        if (has_sign && (!zero_count || *zero_count == 0)) {
            circle.sign_if_no_zero = as_sign(entry.at("sign"), at + "/sign", c);
        }
        doc.bundle.circles.push_back(circle);
    }
}

void parse_transformations(const json& j, const std::string& loc, SpecDocument& doc,
                           Collector& c) {
    if (!j.is_array()) {
        c.add(loc, "expected an array");
        return;
    }
    bool seen_blowup = false;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string at = loc + "/" + std::to_string(i);
        const json& entry = j[i];
        if (!entry.is_object()) {
            c.add(at, "expected an object");
            continue;
        }
        check_keys(entry, at, {"kind", "component"}, c);
        const json* kind = require(entry, "kind", at, c);
        if (!kind) continue;
        std::optional<std::string> name = as_string(*kind, at + "/kind", c);
        if (!name) continue;
        Transformation t;
        if (*name == "elm_real") {
            t.kind = Transformation::Kind::elm_real;
        } else if (*name == "elm_conj_pair") {
            t.kind = Transformation::Kind::elm_conj_pair;
        } else if (*name == "blowup_real") {
            t.kind = Transformation::Kind::blowup_real;
        } else if (*name == "blowup_conj_pair") {
            t.kind = Transformation::Kind::blowup_conj_pair;
        } else {
            c.add(at + "/kind",
                  "unknown kind; use elm_real, elm_conj_pair, blowup_real, or blowup_conj_pair");
            continue;
        }
        bool real_center =
            t.kind == Transformation::Kind::elm_real || t.kind == Transformation::Kind::blowup_real;
        if (real_center) {
            const json* component = require(entry, "component", at, c);
            if (component) {
                if (auto v = as_integer(*component, at + "/component", c)) {
                    if (*v < 0) {
                        c.add(at + "/component", "component id must be non-negative");
                    } else {
                        t.target_component = static_cast<int>(*v);
                    }
                }
            }
        } else if (entry.contains("component")) {
            c.add(at + "/component", "conjugate-pair transformations take no component");
        }
        if (t.is_blowup()) {
            seen_blowup = true;
        } else if (seen_blowup) {
            c.add(at, "out of pipeline order: all elementary transformations precede all blow-ups");
        }
        doc.bundle.transformations.push_back(t);
    }
}

void parse_maps(const json& j, const std::string& loc, SpecDocument& doc, Collector& c) {
    if (!j.is_array()) {
        c.add(loc, "expected an array");
        return;
    }
    std::set<std::string> names;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string at = loc + "/" + std::to_string(i);
        const json& entry = j[i];
        if (!entry.is_object()) {
            c.add(at, "expected an object");
            continue;
        }
        check_keys(entry, at, {"name", "degrees"}, c);
        NamedMap m;
        const json* name = require(entry, "name", at, c);
        if (name) {
            if (auto s = as_string(*name, at + "/name", c)) {
                if (s->empty()) {
                    c.add(at + "/name", "map name must not be empty");
                } else if (!names.insert(*s).second) {
                    c.add(at + "/name", "duplicate map name \"" + *s + "\"");
                } else {
                    m.name = *s;
                }
            }
        }
        const json* degrees = require(entry, "degrees", at, c);
        if (degrees) {
            if (!degrees->is_object()) {
                c.add(at + "/degrees", "expected an object mapping component ids to degrees");
            } else {
                for (const auto& item : degrees->items()) {
                    std::string dloc = at + "/degrees/" + item.key();
                    const std::string& key = item.key();
                    bool digits = !key.empty() &&
                                  std::all_of(key.begin(), key.end(),
                                              [](unsigned char ch) { return std::isdigit(ch); });
                    if (!digits || key.size() > 9) {
                        c.add(dloc, "component id must be a small non-negative integer");
                        continue;
                    }
                    int id = std::stoi(key);
                    if (auto v = as_integer(item.value(), dloc, c)) {
                        m.map.degree_by_component[id] = *v;
                    }
                }
            }
        }
        doc.maps.push_back(std::move(m));
    }
}

std::optional<ClosedSurface> as_closed_surface(const json& j, const std::string& loc,
                                               Collector& c) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "sphere") return ClosedSurface::sphere();
        if (s == "torus") return ClosedSurface::torus();
        if (s == "klein") return ClosedSurface::klein_bottle();
        c.add(loc,
              "unknown surface; use \"sphere\", \"torus\", \"klein\", {\"orientable_genus\": g}, "
              "or {\"crosscaps\": q}");
        return std::nullopt;
    }
    if (j.is_object()) {
        check_keys(j, loc, {"orientable_genus", "crosscaps"}, c);
        bool has_genus = j.contains("orientable_genus");
        bool has_crosscaps = j.contains("crosscaps");
        if (has_genus == has_crosscaps) {
            c.add(loc, "give exactly one of orientable_genus or crosscaps");
            return std::nullopt;
        }
        if (has_genus) {
            if (auto v = as_integer(j.at("orientable_genus"), loc + "/orientable_genus", c)) {
                if (*v < 0) {
                    c.add(loc + "/orientable_genus", "genus must be non-negative");
                    return std::nullopt;
                }
                return ClosedSurface::orientable_of_genus(static_cast<int>(*v));
            }
            return std::nullopt;
        }
        if (auto v = as_integer(j.at("crosscaps"), loc + "/crosscaps", c)) {
            if (*v < 1) {
                c.add(loc + "/crosscaps", "crosscap count must be at least 1");
                return std::nullopt;
            }
            return ClosedSurface::with_crosscaps(static_cast<int>(*v));
        }
        return std::nullopt;
    }
    c.add(loc, "expected a surface name or an object");
    return std::nullopt;
}

void parse_targets(const json& j, const std::string& loc, SpecDocument& doc, Collector& c) {
    if (!j.is_array()) {
        c.add(loc, "expected an array");
        return;
    }
    std::set<std::string> names;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string at = loc + "/" + std::to_string(i);
        const json& entry = j[i];
        if (!entry.is_object()) {
            c.add(at, "expected an object");
            continue;
        }
        check_keys(entry, at, {"name", "topology"}, c);
        NamedTarget t;
        const json* name = require(entry, "name", at, c);
        if (name) {
            if (auto s = as_string(*name, at + "/name", c)) {
                if (s->empty()) {
                    c.add(at + "/name", "target name must not be empty");
                } else if (!names.insert(*s).second) {
                    c.add(at + "/name", "duplicate target name \"" + *s + "\"");
                } else {
                    t.name = *s;
                }
            }
        }
        const json* topology = require(entry, "topology", at, c);
        if (topology) {
            if (auto s = as_closed_surface(*topology, at + "/topology", c)) {
                t.target.topology = *s;
            }
        }
        doc.rational_targets.push_back(std::move(t));
    }
}

void parse_c_rational_kind(const json& j, const std::string& loc, SpecDocument& doc,
                           Collector& c) {
    std::optional<std::string> s = as_string(j, loc, c);
    if (!s) return;
    if (*s == "torus_model") {
        doc.c_rational_kind = CRationalSurfaceKind::Kind::torus_model;
    } else if (*s == "maximal_del_pezzo_degree_2") {
        doc.c_rational_kind = CRationalSurfaceKind::Kind::maximal_del_pezzo_degree_2;
    } else if (*s == "other") {
        doc.c_rational_kind = CRationalSurfaceKind::Kind::other;
    } else {
        c.add(loc,
              "unknown kind; use torus_model, maximal_del_pezzo_degree_2, or other");
    }
}

}  // namespace

SpecDocument parse_spec(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecParseError(std::vector<SchemaError>{{"/", std::string("invalid JSON: ") + e.what()}});
    }
    if (!root.is_object()) {
        throw SpecParseError(std::vector<SchemaError>{{"/", "document must be a JSON object"}});
    }

    Collector c;
    SpecDocument doc;
    check_keys(root, "",
               {"schema_version", "base", "g", "transformations", "maps", "rational_targets",
                "c_rational_kind"},
               c);

    if (const json* v = require(root, "schema_version", "", c)) {
        if (auto s = as_string(*v, "/schema_version", c)) {
            doc.schema_version = *s;
            if (*s != "1") c.add("/schema_version", "unknown schema version \"" + *s + "\"");
        }
    }

    if (const json* v = require(root, "base", "", c)) parse_base(*v, "/base", doc, c);

    if (const json* v = require(root, "g", "", c)) {
        if (!v->is_object()) {
            c.add("/g", "expected an object");
        } else {
            check_keys(*v, "/g", {"explicit", "abstract"}, c);
            bool has_explicit = v->contains("explicit");
            bool has_abstract = v->contains("abstract");
            if (has_explicit == has_abstract) {
                c.add("/g", "give exactly one of explicit or abstract");
            } else if (has_explicit) {
                if (doc.bundle.base.kind != BaseCurve::Kind::explicit_p1) {
                    c.add("/g/explicit", "an explicit g needs the p1 base");
                }
                parse_explicit_g(v->at("explicit"), "/g/explicit", doc, c);
            } else {
                if (doc.bundle.base.kind == BaseCurve::Kind::explicit_p1) {
                    c.add("/g/abstract", "the p1 base carries an explicit g, not circle data");
                }
                parse_abstract_g(v->at("abstract"), "/g/abstract", doc, c);
                if (doc.bundle.base.kind == BaseCurve::Kind::abstract_curve &&
                    static_cast<int>(doc.bundle.circles.size()) !=
                        doc.bundle.base.real_circle_count) {
                    c.add("/g/abstract", "expected " +
                                             std::to_string(doc.bundle.base.real_circle_count) +
                                             " circle entries, one per base circle");
                }
            }
        }
    }

    if (root.contains("transformations")) {
        parse_transformations(root.at("transformations"), "/transformations", doc, c);
    }
    if (root.contains("maps")) parse_maps(root.at("maps"), "/maps", doc, c);
    if (root.contains("rational_targets")) {
        parse_targets(root.at("rational_targets"), "/rational_targets", doc, c);
    }
    if (root.contains("c_rational_kind")) {
        parse_c_rational_kind(root.at("c_rational_kind"), "/c_rational_kind", doc, c);
    }

    if (!c.errors.empty()) throw SpecParseError(std::move(c.errors));
    return doc;
}

namespace {

ordered_json coefficient_strings(const Polynomial& p) {
    ordered_json arr = ordered_json::array();
    for (const Rational& coeff : p.coefficients()) arr.push_back(to_string(coeff));
    return arr;
}

ordered_json closed_surface_json(const ClosedSurface& s) {
    if (s.is_sphere()) return "sphere";
    if (s.is_torus()) return "torus";
    if (s == ClosedSurface::klein_bottle()) return "klein";
    ordered_json out;
    if (s.orientable) {
        out["orientable_genus"] = s.genus;
    } else {
        out["crosscaps"] = s.genus;
    }
    return out;
}

}  // namespace

std::string serialize_spec(const SpecDocument& doc) {
    ordered_json root;
    root["schema_version"] = doc.schema_version;

    ordered_json base;
    if (doc.bundle.base.kind == BaseCurve::Kind::explicit_p1) {
        base["kind"] = "p1";
    } else {
        base["kind"] = "abstract";
        base["genus"] = doc.bundle.base.genus;
        base["real_circles"] = doc.bundle.base.real_circle_count;
    }
    root["base"] = base;

    ordered_json g;
    if (doc.bundle.explicit_g) {
        ordered_json e;
        e["numerator"] = coefficient_strings(doc.bundle.explicit_g->numerator());
        e["denominator"] = coefficient_strings(doc.bundle.explicit_g->denominator());
        g["explicit"] = e;
    } else {
        ordered_json circles = ordered_json::array();
        for (const CircleData& circle : doc.bundle.circles) {
            ordered_json entry;
            entry["zeros"] = circle.zeros;
            if (circle.sign_if_no_zero) {
                entry["sign"] = *circle.sign_if_no_zero > 0 ? "+" : "-";
            }
            circles.push_back(entry);
        }
        g["abstract"] = circles;
    }
    root["g"] = g;

    ordered_json transformations = ordered_json::array();
    for (const Transformation& t : doc.bundle.transformations) {
        ordered_json entry;
        entry["kind"] = to_string(t.kind);
        if (t.target_component) entry["component"] = *t.target_component;
        transformations.push_back(entry);
    }
    root["transformations"] = transformations;

    if (!doc.maps.empty()) {
        ordered_json maps = ordered_json::array();
        for (const NamedMap& m : doc.maps) {
            ordered_json entry;
            entry["name"] = m.name;
            ordered_json degrees;
            for (const auto& [id, degree] : m.map.degree_by_component) {
                degrees[std::to_string(id)] = std::to_string(degree);
            }
            entry["degrees"] = degrees.is_null() ? ordered_json::object() : degrees;
            maps.push_back(entry);
        }
        root["maps"] = maps;
    }

    if (!doc.rational_targets.empty()) {
        ordered_json targets = ordered_json::array();
        for (const NamedTarget& t : doc.rational_targets) {
            ordered_json entry;
            entry["name"] = t.name;
            entry["topology"] = closed_surface_json(t.target.topology);
            targets.push_back(entry);
        }
        root["rational_targets"] = targets;
    }

    if (doc.c_rational_kind) {
        switch (*doc.c_rational_kind) {
            case CRationalSurfaceKind::Kind::torus_model:
                root["c_rational_kind"] = "torus_model";
                break;
            case CRationalSurfaceKind::Kind::maximal_del_pezzo_degree_2:
                root["c_rational_kind"] = "maximal_del_pezzo_degree_2";
                break;
            case CRationalSurfaceKind::Kind::other:
                root["c_rational_kind"] = "other";
                break;
        }
    }

    return root.dump(2) + "\n";
}

}  // namespace conicbundle
