#pragma once

#include <vector>

#include "conicbundle/polynomial.hpp"
#include "conicbundle/sturm.hpp"

namespace conicbundle {

// A point of the circle P^1(R) = R u {inf}.
struct CirclePoint {
    bool at_infinity = false;
    Rational value;

    static CirclePoint infinity() { return {true, Rational(0)}; }
    static CirclePoint at(Rational v) { return {false, std::move(v)}; }
};

// Quotient of coprime polynomials; the denominator is nonzero and kept with
// positive leading coefficient.
class RationalFunction {
public:
    RationalFunction(Polynomial numerator, Polynomial denominator);

    static RationalFunction from_int_coeffs(std::initializer_list<long> numerator,
                                            std::initializer_list<long> denominator);

    const Polynomial& numerator() const { return numerator_; }
    const Polynomial& denominator() const { return denominator_; }
    bool is_zero() const { return numerator_.is_zero(); }

    // deg(denominator) - deg(numerator): the vanishing order at the point at
    // infinity of P^1(R). Negative means a pole at infinity.
    int order_at_infinity() const;

    bool operator==(const RationalFunction&) const = default;

private:
    Polynomial numerator_;
    Polynomial denominator_;
};

// Exact sign of g at a circle point. Throws PoleAtSample when the sample is a
// pole (a real zero of the denominator, or infinity when the numerator
// dominates).
int sign_on_circle(const RationalFunction& g, const CirclePoint& sample);

// Validation of a rational function against the conic-bundle input model:
// no real pole anywhere on the circle, all real zeros simple.
struct GValidation {
    bool pole_free = false;
    bool simple_real_zeros = false;
    int order_at_infinity = 0;
    // isolated finite real zeros, sorted; followed by the infinity marker
    // when order_at_infinity == 1
    std::vector<IsolatingInterval> real_zero_intervals;
    int total_real_zeros = 0;

    bool ok() const { return pole_free && simple_real_zeros; }
    // empty when ok(); otherwise the failing clauses
    std::vector<std::string> failures() const;
};

GValidation validate_g(const RationalFunction& g);
GValidation validate_g(const RationalFunction& g, const Rational& isolation_width);

std::string to_string(const RationalFunction& g, char variable = 'z');

}  // namespace conicbundle
