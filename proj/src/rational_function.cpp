#include "conicbundle/rational_function.hpp"

#include <utility>

#include "conicbundle/errors.hpp"

namespace conicbundle {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    if (denominator_.is_zero()) throw InvalidInput("rational function with zero denominator");
    if (numerator_.is_zero()) {
        denominator_ = Polynomial::constant(Rational(1));
        return;
    }
    Polynomial common = gcd(numerator_, denominator_);
    if (common.degree() > 0) {
        Polynomial q, r;
        Polynomial::divide(numerator_, common, q, r);
        numerator_ = std::move(q);
        Polynomial::divide(denominator_, common, q, r);
        denominator_ = std::move(q);
    }
    if (sign_of(denominator_.leading_coefficient()) < 0) {
        numerator_ = -numerator_;
        denominator_ = -denominator_;
    }
}

RationalFunction RationalFunction::from_int_coeffs(std::initializer_list<long> numerator,
                                                   std::initializer_list<long> denominator) {
    return RationalFunction(Polynomial::from_ints(numerator), Polynomial::from_ints(denominator));
}

int RationalFunction::order_at_infinity() const {
    if (numerator_.is_zero()) throw InvalidInput("order at infinity of the zero function");
    return denominator_.degree() - numerator_.degree();
}

int sign_on_circle(const RationalFunction& g, const CirclePoint& sample) {
    if (g.is_zero()) return 0;
    if (sample.at_infinity) {
        int order = g.order_at_infinity();
        if (order < 0) throw PoleAtSample("pole at infinity");
        if (order > 0) return 0;
        return sign_of(g.numerator().leading_coefficient()) *
               sign_of(g.denominator().leading_coefficient());
    }
    int den_sign = g.denominator().sign_at(sample.value);
    if (den_sign == 0) {
        throw PoleAtSample("pole at " + to_string(sample.value));
    }
    return g.numerator().sign_at(sample.value) * den_sign;
}

std::vector<std::string> GValidation::failures() const {
    std::vector<std::string> out;
    if (!pole_free) {
        if (order_at_infinity < 0) {
            out.push_back("g has a pole at infinity (numerator degree exceeds denominator degree)");
        } else {
            out.push_back("the denominator of g has a real zero");
        }
    }
    if (!simple_real_zeros) {
        if (order_at_infinity >= 2) {
            out.push_back("g vanishes to order >= 2 at infinity");
        } else {
            out.push_back("not all real zeros of g are simple");
        }
    }
    return out;
}

GValidation validate_g(const RationalFunction& g) {
    return validate_g(g, default_isolation_width());
}

GValidation validate_g(const RationalFunction& g, const Rational& isolation_width) {
    if (g.is_zero()) throw InvalidInput("validate_g of the zero function");
    GValidation v;
    v.order_at_infinity = g.order_at_infinity();

    const Polynomial& den = g.denominator();
    bool den_real_zero = den.degree() > 0 && count_real_roots(squarefree_part(den)) > 0;
    v.pole_free = !den_real_zero && v.order_at_infinity >= 0;

    const Polynomial& num = g.numerator();
    bool repeated_finite_zero = false;
    if (num.degree() > 0) {
        Polynomial repeated = gcd(num, num.derivative());
        repeated_finite_zero = repeated.degree() > 0 && count_real_roots(squarefree_part(repeated)) > 0;
    }
    v.simple_real_zeros = !repeated_finite_zero && v.order_at_infinity <= 1;

    if (num.degree() > 0) {
        v.real_zero_intervals = isolate_real_roots(squarefree_part(num), isolation_width);
    }
    if (v.order_at_infinity == 1) {
        v.real_zero_intervals.push_back(IsolatingInterval::infinity_marker());
    }
    v.total_real_zeros = static_cast<int>(v.real_zero_intervals.size());
    return v;
}

std::string to_string(const RationalFunction& g, char variable) {
    std::string num = to_string(g.numerator(), variable);
    if (g.denominator().degree() == 0 && g.denominator().coefficient(0) == 1) return num;
    return "(" + num + ") / (" + to_string(g.denominator(), variable) + ")";
}

}  // namespace conicbundle
