#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "conicbundle/rational.hpp"

namespace conicbundle {

// Univariate polynomial over the rationals, dense coefficients in ascending
// degree order. The zero polynomial has an empty coefficient list and
// degree() == -1; otherwise the leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial constant(const Rational& c);
    // Convenience for tests and literals: {a0, a1, ...} ascending.
    static Polynomial from_ints(std::initializer_list<long> coefficients);

    bool is_zero() const { return coefficients_.empty(); }
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    const Rational& leading_coefficient() const;
    Rational coefficient(int power) const;

    Rational operator()(const Rational& x) const;
    int sign_at(const Rational& x) const { return sign_of((*this)(x)); }
    // Sign of the dominant term as x -> +inf / -inf; 0 only for the zero
    // polynomial.
    int sign_at_pos_infinity() const;
    int sign_at_neg_infinity() const;

    Polynomial derivative() const;
    Polynomial monic() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    bool operator==(const Polynomial& other) const = default;

    // Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
    static void divide(const Polynomial& a, const Polynomial& b, Polynomial& quotient,
                       Polynomial& remainder);

private:
    void trim();
    std::vector<Rational> coefficients_;
};

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// p / gcd(p, p'), monic. Same real roots as p, all simple.
// Throws InvalidInput on the zero polynomial.
Polynomial squarefree_part(const Polynomial& p);

bool is_squarefree(const Polynomial& p);

std::string to_string(const Polynomial& p, char variable = 'z');

}  // namespace conicbundle
