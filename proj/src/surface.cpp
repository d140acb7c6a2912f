#include "conicbundle/surface.hpp"

#include <algorithm>
#include <utility>

#include "conicbundle/errors.hpp"

namespace conicbundle {

int Topology::crosscap_count() const {
    switch (kind) {
        case Kind::sphere:
        case Kind::torus:
            return 0;
        case Kind::klein:
            return 2;
        case Kind::cross_surface:
        default:
            return crosscaps;
    }
}

int Topology::euler_characteristic() const {
    switch (kind) {
        case Kind::sphere:
            return 2;
        case Kind::torus:
        case Kind::klein:
            return 0;
        case Kind::cross_surface:
        default:
            return 2 - crosscaps;
    }
}

std::string Topology::name() const {
    switch (kind) {
        case Kind::sphere:
            return "sphere";
        case Kind::torus:
            return "torus";
        case Kind::klein:
            return "klein";
        case Kind::cross_surface:
        default:
            if (crosscaps == 1) return "cross-surface(1) [RP^2]";
            if (crosscaps == 2) return "cross-surface(2) [Klein bottle]";
            return "cross-surface(" + std::to_string(crosscaps) + ")";
    }
}

std::string to_string(Transformation::Kind kind) {
    switch (kind) {
        case Transformation::Kind::elm_real:
            return "elm_real";
        case Transformation::Kind::elm_conj_pair:
            return "elm_conj_pair";
        case Transformation::Kind::blowup_real:
            return "blowup_real";
        case Transformation::Kind::blowup_conj_pair:
        default:
            return "blowup_conj_pair";
    }
}

const RealComponent* SurfaceState::find(int id) const {
    for (const auto& c : components) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

namespace {

void validate_base(const BaseCurve& base) {
    if (base.genus < 0) throw InvalidSpec("base genus must be non-negative");
    if (base.real_circle_count < 0) throw InvalidSpec("base circle count must be non-negative");
    if (base.kind == BaseCurve::Kind::explicit_p1) {
        if (base.genus != 0 || base.real_circle_count != 1) {
            throw InvalidSpec("an explicit P^1 base has genus 0 and exactly one real circle");
        }
    } else if (base.real_circle_count > base.genus + 1) {
        throw InvalidSpec("a real curve of genus g has at most g+1 circles");
    }
}

// Signs of g on the arcs between consecutive real zeros of the circle
// R u {inf}, in circular order starting from the leftmost finite zero.
// Arcs must alternate in sign because every zero is simple.
std::vector<int> arc_signs(const RationalFunction& g, const GValidation& validation) {
    const auto& zeros = validation.real_zero_intervals;
    bool infinity_is_zero = !zeros.empty() && zeros.back().at_infinity;
    std::size_t finite = zeros.size() - (infinity_is_zero ? 1 : 0);

    std::vector<int> signs;
    // arcs between consecutive finite zeros
    for (std::size_t i = 0; i + 1 < finite; ++i) {
        Rational sample = (zeros[i].high + zeros[i + 1].low) / 2;
        signs.push_back(sign_on_circle(g, CirclePoint::at(sample)));
    }
    if (finite == 0) return signs;
    if (infinity_is_zero) {
        // two arcs: last finite zero -> inf, and inf -> first finite zero
        signs.push_back(sign_on_circle(g, CirclePoint::at(zeros[finite - 1].high + 1)));
        signs.push_back(sign_on_circle(g, CirclePoint::at(zeros[0].low - 1)));
    } else {
        // one wrap-around arc through infinity
        signs.push_back(sign_on_circle(g, CirclePoint::infinity()));
    }
    return signs;
}

}  // namespace

SurfaceState build_minimal_surface(const ConicBundleSpec& spec) {
    return build_minimal_surface(spec, default_isolation_width());
}

SurfaceState build_minimal_surface(const ConicBundleSpec& spec, const Rational& isolation_width) {
    validate_base(spec.base);

    SurfaceState state;
    state.base = spec.base;
    state.minimal = true;
    state.c_rational = spec.base.genus == 0;

    std::vector<CircleData> circles;
    if (spec.base.kind == BaseCurve::Kind::explicit_p1) {
        if (!spec.explicit_g) throw InvalidSpec("explicit P^1 base requires an explicit g");
        GValidation validation = validate_g(*spec.explicit_g, isolation_width);
        if (!validation.ok()) {
            std::string why;
            for (const auto& f : validation.failures()) {
                if (!why.empty()) why += "; ";
                why += f;
            }
            throw InvalidSpec("g fails validation: " + why);
        }
        if (validation.total_real_zeros % 2 != 0) {
            throw InvalidSpec("g has an odd number of real zeros on the circle");
        }
        if (validation.total_real_zeros == 0) {
            CircleData c;
            c.zeros = 0;
            c.sign_if_no_zero = sign_on_circle(*spec.explicit_g, CirclePoint::at(Rational(0)));
            circles.push_back(c);
        } else {
            // the positive arcs determine the spheres; signs alternate, so
            // exactly half the arcs are positive
            std::vector<int> signs = arc_signs(*spec.explicit_g, validation);
            int positive = 0;
            for (int s : signs) positive += s > 0 ? 1 : 0;
            if (positive * 2 != static_cast<int>(signs.size())) {
                throw InvalidSpec("internal: arcs between simple zeros do not alternate in sign");
            }
            CircleData c;
            c.zeros = validation.total_real_zeros;
            circles.push_back(c);
        }
    } else {
        if (spec.explicit_g) throw InvalidSpec("abstract base cannot carry an explicit g");
        if (static_cast<int>(spec.circles.size()) != spec.base.real_circle_count) {
            throw InvalidSpec("abstract g data must have one entry per base circle");
        }
        circles = spec.circles;
    }

    int next_id = 0;
    for (std::size_t circle = 0; circle < circles.size(); ++circle) {
        const CircleData& c = circles[circle];
        if (c.zeros < 0) throw InvalidSpec("negative zero count on a circle");
        if (c.zeros % 2 != 0) {
            throw InvalidSpec("zero count on circle " + std::to_string(circle) +
                              " is odd; a sign change pattern on a circle closes up only with an even count");
        }
        if (c.zeros == 0) {
            if (!c.sign_if_no_zero) {
                throw InvalidSpec("circle " + std::to_string(circle) +
                                  " has no zeros and needs the sign of g");
            }
            if (*c.sign_if_no_zero > 0) {
                RealComponent torus;
                torus.id = next_id++;
                torus.topology = Topology::torus();
                torus.dominates_circle = true;
                torus.circle_index = static_cast<int>(circle);
                state.components.push_back(torus);
            }
            // negative sign: no real points over this circle
        } else {
            if (c.sign_if_no_zero) {
                throw InvalidSpec("circle " + std::to_string(circle) +
                                  " has zeros; a constant sign makes no sense");
            }
            for (int m = 0; m < c.zeros / 2; ++m) {
                RealComponent sphere;
                sphere.id = next_id++;
                sphere.topology = Topology::sphere();
                sphere.dominates_circle = false;
                sphere.circle_index = static_cast<int>(circle);
                state.components.push_back(sphere);
            }
        }
    }
    return state;
}

SurfaceState apply_elm(const SurfaceState& state, const Transformation& t) {
    if (!t.is_elm()) throw InvalidSpec("apply_elm called with a blow-up");
    if (!state.minimal) {
        throw InvalidSpec("elementary transformations must precede blow-ups");
    }
    SurfaceState next = state;
    if (t.kind == Transformation::Kind::elm_conj_pair) {
        next.transform_log.push_back("elm_conj_pair: no real point moved");
        return next;
    }
    if (!t.target_component) throw InvalidSpec("elm_real needs a target component");
    RealComponent* target = nullptr;
    for (auto& c : next.components) {
        if (c.id == *t.target_component) target = &c;
    }
    if (target == nullptr) {
        throw InvalidSpec("elm_real target component " + std::to_string(*t.target_component) +
                          " does not exist");
    }
    switch (target->topology.kind) {
        case Topology::Kind::sphere:
            break;  // spherical components stay spherical
        case Topology::Kind::torus:
            target->topology = Topology::klein();
            break;
        case Topology::Kind::klein:
            next.warnings.push_back(
                "elm_real on Klein component " + std::to_string(target->id) +
                ": flipping back to a torus extends the per-component parity rule beyond "
                "the minimal model; treated as an assumption");
            target->topology = Topology::torus();
            break;
        default:
            throw InvalidSpec("elm_real target must be a sphere, a torus, or a dominating Klein");
    }
    target->real_elm_count += 1;
    next.transform_log.push_back("elm_real on component " + std::to_string(target->id));

    next.section_klein_ids.clear();
    for (const auto& c : next.components) {
        if (c.topology.kind == Topology::Kind::klein && c.dominates_circle) {
            next.section_klein_ids.push_back(c.id);
        }
    }
    return next;
}

SurfaceState apply_blowup(const SurfaceState& state, const Transformation& t) {
    if (!t.is_blowup()) throw InvalidSpec("apply_blowup called with an elm");
    SurfaceState next = state;
    if (next.minimal) {
        // freeze the section's Klein set at the end of the elm stage
        next.section_klein_ids.clear();
        for (const auto& c : next.components) {
            if (c.topology.kind == Topology::Kind::klein && c.dominates_circle) {
                next.section_klein_ids.push_back(c.id);
            }
        }
    }
    next.minimal = false;
    if (t.kind == Transformation::Kind::blowup_conj_pair) {
        next.transform_log.push_back("blowup_conj_pair: real locus unchanged");
        return next;
    }
    if (!t.target_component) throw InvalidSpec("blowup_real needs a target component");
    RealComponent* target = nullptr;
    for (auto& c : next.components) {
        if (c.id == *t.target_component) target = &c;
    }
    if (target == nullptr) {
        throw InvalidSpec("blowup_real target component " + std::to_string(*t.target_component) +
                          " does not exist (the center must be a real point of the surface)");
    }
    // connected sum with RP^2; a torus handle converts to two crosscaps
    switch (target->topology.kind) {
        case Topology::Kind::sphere:
            target->topology = Topology::cross_surface(1);
            break;
        case Topology::Kind::torus:
            target->topology = Topology::cross_surface(3);
            break;
        case Topology::Kind::klein:
            target->topology = Topology::cross_surface(3);
            break;
        case Topology::Kind::cross_surface:
        default:
            target->topology = Topology::cross_surface(target->topology.crosscaps + 1);
            break;
    }
    target->has_real_exceptional = true;
    next.transform_log.push_back("blowup_real on component " + std::to_string(target->id));
    return next;
}

SurfaceState apply_all(const ConicBundleSpec& spec) {
    return apply_all(spec, default_isolation_width());
}

SurfaceState apply_all(const ConicBundleSpec& spec, const Rational& isolation_width) {
    bool seen_blowup = false;
    for (const auto& t : spec.transformations) {
        if (t.is_blowup()) {
            seen_blowup = true;
        } else if (seen_blowup) {
            throw InvalidSpec("all elementary transformations must precede all blow-ups");
        }
    }
    SurfaceState state = build_minimal_surface(spec, isolation_width);
    for (const auto& t : spec.transformations) {
        state = t.is_elm() ? apply_elm(state, t) : apply_blowup(state, t);
    }
    return state;
}

Census component_census(const SurfaceState& state) {
    Census census;
    for (const auto& c : state.components) {
        if (c.topology.orientable()) {
            census.orientable_ids.push_back(c.id);
        } else {
            census.nonorientable_ids.push_back(c.id);
        }
        switch (c.topology.kind) {
            case Topology::Kind::sphere:
                census.spheres += 1;
                break;
            case Topology::Kind::torus:
                census.tori += 1;
                break;
            default:
                break;
        }
        if (c.topology.is_klein_bottle()) {
            census.klein_bottles += 1;
            if (c.dominates_circle) census.dominating_klein_bottles += 1;
        }
    }
    return census;
}

}  // namespace conicbundle
