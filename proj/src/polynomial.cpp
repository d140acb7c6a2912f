#include "conicbundle/polynomial.hpp"

#include <utility>

#include "conicbundle/errors.hpp"

namespace conicbundle {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
    trim();
}

Polynomial Polynomial::constant(const Rational& c) {
    if (c == 0) return Polynomial{};
    return Polynomial({c});
}

Polynomial Polynomial::from_ints(std::initializer_list<long> coefficients) {
    std::vector<Rational> cs;
    cs.reserve(coefficients.size());
    for (long c : coefficients) cs.emplace_back(c);
    return Polynomial(std::move(cs));
}

void Polynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

const Rational& Polynomial::leading_coefficient() const {
    if (is_zero()) throw InvalidInput("zero polynomial has no leading coefficient");
    return coefficients_.back();
}

Rational Polynomial::coefficient(int power) const {
    if (power < 0 || power >= static_cast<int>(coefficients_.size())) return Rational(0);
    return coefficients_[static_cast<std::size_t>(power)];
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

int Polynomial::sign_at_pos_infinity() const {
    if (is_zero()) return 0;
    return sign_of(leading_coefficient());
}

int Polynomial::sign_at_neg_infinity() const {
    if (is_zero()) return 0;
    int s = sign_of(leading_coefficient());
    return degree() % 2 == 0 ? s : -s;
}

Polynomial Polynomial::derivative() const {
    if (degree() <= 0) return Polynomial{};
    std::vector<Rational> cs;
    cs.reserve(coefficients_.size() - 1);
    for (std::size_t i = 1; i < coefficients_.size(); ++i) {
        cs.push_back(Rational(static_cast<long>(i)) * coefficients_[i]);
    }
    return Polynomial(std::move(cs));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Rational inv = Rational(1) / leading_coefficient();
    return inv * *this;
}

Polynomial Polynomial::operator-() const { return Rational(-1) * *this; }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> cs(std::max(a.coefficients_.size(), b.coefficients_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) cs[i] += a.coefficients_[i];
    for (std::size_t i = 0; i < b.coefficients_.size(); ++i) cs[i] += b.coefficients_[i];
    return Polynomial(std::move(cs));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial{};
    std::vector<Rational> cs(a.coefficients_.size() + b.coefficients_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
            cs[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
    }
    return Polynomial(std::move(cs));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c == 0) return Polynomial{};
    std::vector<Rational> cs = p.coefficients_;
    for (auto& x : cs) x *= c;
    return Polynomial(std::move(cs));
}

void Polynomial::divide(const Polynomial& a, const Polynomial& b, Polynomial& quotient,
                        Polynomial& remainder) {
    if (b.is_zero()) throw InvalidInput("polynomial division by zero");
    std::vector<Rational> rem = a.coefficients_;
    int db = b.degree();
    if (a.degree() < db) {
        quotient = Polynomial{};
        remainder = a;
        return;
    }
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
    const Rational& lead = b.leading_coefficient();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational factor = rem[static_cast<std::size_t>(k + db)] / lead;
        quot[static_cast<std::size_t>(k)] = factor;
        if (factor == 0) continue;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= factor * b.coefficients_[static_cast<std::size_t>(j)];
        }
    }
    quotient = Polynomial(std::move(quot));
    remainder = Polynomial(std::move(rem));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial u = a;
    Polynomial v = b;
    while (!v.is_zero()) {
        Polynomial q, r;
        Polynomial::divide(u, v, q, r);
        u = std::move(v);
        v = std::move(r);
    }
    return u.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw InvalidInput("squarefree_part of the zero polynomial");
    if (p.degree() == 0) return Polynomial::constant(Rational(1));
    Polynomial g = gcd(p, p.derivative());
    Polynomial q, r;
    Polynomial::divide(p, g, q, r);
    // g divides p exactly
    return q.monic();
}

bool is_squarefree(const Polynomial& p) {
    if (p.is_zero()) return false;
    if (p.degree() <= 1) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

std::string to_string(const Polynomial& p, char variable) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coefficient(k);
        if (c == 0) continue;
        if (!out.empty()) {
            out += sign_of(c) > 0 ? " + " : " - ";
            if (sign_of(c) < 0) c = -c;
        }
        bool unit = (c == 1 && k > 0);
        if (!unit) out += to_string(c);
        if (k > 0) {
            if (!unit) out += "*";
            out += variable;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace conicbundle
