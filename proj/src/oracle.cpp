#include "conicbundle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "conicbundle/errors.hpp"
#include "conicbundle/sturm.hpp"

namespace conicbundle {

namespace {

std::vector<double> double_coefficients(const Polynomial& p) {
    std::vector<double> out(static_cast<std::size_t>(p.degree() + 1));
    for (int i = 0; i <= p.degree(); ++i) {
        out[static_cast<std::size_t>(i)] = p.coefficient(i).get_d();
    }
    return out;
}

double horner(const std::vector<double>& coeffs, double x) {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

int sign_of_double(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// Grid symmetric around 0 with geometrically spaced magnitudes from `bound`
// down to bound * 1e-12, plus 0 itself; resolves roots of any scale inside
// the bound interval.
std::vector<double> geometric_grid(double bound, int samples) {
    int per_side = std::max(samples / 2, 1);
    double ratio = per_side > 1 ? std::pow(1e-12, 1.0 / (per_side - 1)) : 1.0;
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(2 * per_side + 1));
    double magnitude = bound;
    for (int i = 0; i < per_side; ++i) {
        grid.push_back(magnitude);
        grid.push_back(-magnitude);
        magnitude *= ratio;
    }
    grid.push_back(0.0);
    std::sort(grid.begin(), grid.end());
    return grid;
}

void poly_signs_serial(const std::vector<double>& coeffs, const std::vector<double>& grid,
                       std::vector<int>& signs) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
        signs[i] = sign_of_double(horner(coeffs, grid[i]));
    }
}

void poly_signs_parallel(const std::vector<double>& coeffs, const std::vector<double>& grid,
                         std::vector<int>& signs) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        signs[static_cast<std::size_t>(i)] =
            sign_of_double(horner(coeffs, grid[static_cast<std::size_t>(i)]));
    }
}

// One root per zero-valued sample; otherwise one per sign flip between
// consecutive nonzero signs. A zero sample swallows the flip around it so a
// simple root sitting exactly on the grid is counted once.
int count_root_events(const std::vector<int>& signs) {
    int count = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) {
            ++count;
            last = 0;
        } else {
            if (last != 0 && s != last) ++count;
            last = s;
        }
    }
    return count;
}

}  // namespace

NumericRootCount numeric_root_count(const Polynomial& p, int samples, OracleExecution exec) {
    if (p.is_zero()) throw InvalidInput("numeric_root_count of the zero polynomial");
    if (!is_squarefree(p)) throw InvalidInput("numeric_root_count requires a square-free polynomial");
    if (samples < 2 * p.degree() + 2) {
        throw InvalidInput("numeric_root_count needs at least 2*degree + 2 samples");
    }
    double bound = root_bound(p).get_d();
    std::vector<double> grid = geometric_grid(bound, samples);
    std::vector<double> coeffs = double_coefficients(p);
    std::vector<int> signs(grid.size());
    if (exec == OracleExecution::serial) {
        poly_signs_serial(coeffs, grid, signs);
    } else {
        poly_signs_parallel(coeffs, grid, signs);
    }
    return {count_root_events(signs), {static_cast<int>(grid.size()), bound}};
}

namespace {

// Homogeneous double-precision view of g: sign(g) at the circle point with
// half-angle t is sign(N(s,c)) * sign(D(s,c)) * sign(c)^order for
// (s, c) = (sin t, cos t), where N, D are the numerator and denominator
// homogenized to their own degrees and order = deg D - deg N >= 0.
struct HomogeneousG {
    std::vector<double> num;  // ascending
    std::vector<double> den;
    int order = 0;
};

// Sign of sum a_j s^j c^(d-j) with a crude running error bound; 0 means the
// value is numerically indistinguishable from zero at this sample.
int homogeneous_sign(const std::vector<double>& coeffs, double s, double c) {
    double value = 0.0;
    double scale = 0.0;
    std::size_t d = coeffs.size() - 1;
    double s_power = 1.0;
    std::vector<double> c_powers(coeffs.size());
    c_powers[d] = 1.0;
    for (std::size_t j = d; j-- > 0;) c_powers[j] = c_powers[j + 1] * c;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        double term = coeffs[j] * s_power * c_powers[j];
        value += term;
        scale += std::abs(term);
        s_power *= s;
    }
    if (std::abs(value) <= 64.0 * std::numeric_limits<double>::epsilon() * scale) return 0;
    return sign_of_double(value);
}

int sign_of_g_at_angle(const HomogeneousG& g, double phi) {
    double s = std::sin(phi / 2.0);
    double c = std::cos(phi / 2.0);
    int sn = homogeneous_sign(g.num, s, c);
    int sd = homogeneous_sign(g.den, s, c);
    if (sn == 0 || sd == 0) return 0;
    int correction = (g.order % 2 != 0 && c < 0.0) ? -1 : 1;
    if (g.order > 0 && c == 0.0) return 0;
    return sn * sd * correction;
}

// Sign at grid point i, with one offset re-sample on ambiguity; 0 only when
// both attempts are ambiguous.
int resolved_sign(const HomogeneousG& g, double phi, double pitch) {
    int s = sign_of_g_at_angle(g, phi);
    if (s != 0) return s;
    return sign_of_g_at_angle(g, phi + 0.37 * pitch);
}

void circle_signs_serial(const HomogeneousG& g, int samples, std::vector<int>& signs) {
    const double pitch = 2.0 * M_PI / samples;
    for (int i = 0; i < samples; ++i) {
        signs[static_cast<std::size_t>(i)] = resolved_sign(g, -M_PI + pitch * i, pitch);
    }
}

void circle_signs_parallel(const HomogeneousG& g, int samples, std::vector<int>& signs) {
    const double pitch = 2.0 * M_PI / samples;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < samples; ++i) {
        signs[static_cast<std::size_t>(i)] = resolved_sign(g, -M_PI + pitch * i, pitch);
    }
}

}  // namespace

ComponentCount numeric_component_count(const RationalFunction& g, int samples,
                                       OracleExecution exec) {
    if (samples < 256) throw InvalidInput("numeric_component_count needs at least 256 samples");
    GValidation validation = validate_g(g);
    if (!validation.ok()) {
        std::string message = "numeric_component_count requires a valid g:";
        for (const auto& f : validation.failures()) message += " " + f + ";";
        throw InvalidInput(message);
    }

    HomogeneousG h;
    h.num = double_coefficients(g.numerator());
    h.den = double_coefficients(g.denominator());
    h.order = g.order_at_infinity();

    std::vector<int> signs(static_cast<std::size_t>(samples));
    if (exec == OracleExecution::serial) {
        circle_signs_serial(h, samples, signs);
    } else {
        circle_signs_parallel(h, samples, signs);
    }
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] == 0) {
            throw OracleInconclusive("sign of g ambiguous near grid point " + std::to_string(i) +
                                     " of " + std::to_string(samples) +
                                     " even after an offset re-sample");
        }
    }

    int arcs = 0;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        std::size_t prev = (i + signs.size() - 1) % signs.size();
        if (signs[i] > 0 && signs[prev] < 0) ++arcs;
    }
    if (arcs == 0) return signs[0] > 0 ? ComponentCount{0, 1} : ComponentCount{0, 0};
    return {arcs, 0};
}

bool root_count_agrees(const Polynomial& p, int expected, int initial_samples, int max_samples) {
    int samples = std::max(initial_samples, 2 * p.degree() + 2);
    while (samples <= max_samples) {
        if (numeric_root_count(p, samples).count == expected) return true;
        if (samples == max_samples) break;
        samples = std::min(samples * 2, max_samples);
    }
    return false;
}

bool component_count_agrees(const RationalFunction& g, const ComponentCount& expected,
                            int initial_samples, int max_samples) {
    int samples = std::max(initial_samples, 256);
    while (samples <= max_samples) {
        try {
            if (numeric_component_count(g, samples) == expected) return true;
        } catch (const OracleInconclusive&) {
            // fall through to refinement
        }
        if (samples == max_samples) break;
        samples = std::min(samples * 2, max_samples);
    }
    return false;
}

}  // namespace conicbundle
