#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "conicbundle/errors.hpp"
#include "conicbundle/polynomial.hpp"

using namespace conicbundle;

TEST_CASE("construction trims trailing zeros") {
    Polynomial p{{Rational(1), Rational(2), Rational(0), Rational(0)}};
    CHECK(p.degree() == 1);
    CHECK(p == Polynomial::from_ints({1, 2}));

    CHECK(Polynomial::zero().degree() == -1);
    CHECK(Polynomial::zero().is_zero());
    CHECK(Polynomial{{Rational(0)}}.is_zero());
    CHECK(Polynomial::constant(Rational(5)).degree() == 0);
}

TEST_CASE("evaluation and signs") {
    Polynomial p = Polynomial::from_ints({-2, 0, 1});  // z^2 - 2
    CHECK(p(Rational(0)) == Rational(-2));
    CHECK(p(Rational(2)) == Rational(2));
    CHECK(p(Rational(3, 2)) == Rational(1, 4));
    CHECK(p.sign_at(Rational(1)) == -1);
    CHECK(p.sign_at(Rational(2)) == 1);
    CHECK(p.sign_at_pos_infinity() == 1);
    CHECK(p.sign_at_neg_infinity() == 1);

    Polynomial odd = Polynomial::from_ints({0, -3});  // -3z
    CHECK(odd.sign_at_pos_infinity() == -1);
    CHECK(odd.sign_at_neg_infinity() == 1);
    CHECK(Polynomial::zero().sign_at_pos_infinity() == 0);
}

TEST_CASE("ring operations") {
    Polynomial a = Polynomial::from_ints({1, 1});   // z + 1
    Polynomial b = Polynomial::from_ints({-1, 1});  // z - 1
    CHECK(a * b == Polynomial::from_ints({-1, 0, 1}));
    CHECK(a + b == Polynomial::from_ints({0, 2}));
    CHECK(a - a == Polynomial::zero());
    CHECK(Rational(3) * a == Polynomial::from_ints({3, 3}));
    CHECK(-b == Polynomial::from_ints({1, -1}));
    CHECK(a * Polynomial::zero() == Polynomial::zero());
}

TEST_CASE("euclidean division satisfies a = q*b + r") {
    Polynomial a = Polynomial::from_ints({1, 2, 0, 1});  // z^3 + 2z + 1
    Polynomial b = Polynomial::from_ints({1, 0, 1});     // z^2 + 1
    Polynomial q, r;
    Polynomial::divide(a, b, q, r);
    CHECK(q == Polynomial::from_ints({0, 1}));
    CHECK(r == Polynomial::from_ints({1, 1}));
    CHECK(q * b + r == a);

    CHECK_THROWS_AS(Polynomial::divide(a, Polynomial::zero(), q, r), InvalidInput);
}

TEST_CASE("division property on random inputs") {
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> ac(static_cast<std::size_t>(deg(rng)) + 1);
        std::vector<Rational> bc(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& c : ac) c = Rational(coeff(rng));
        for (auto& c : bc) c = Rational(coeff(rng));
        Polynomial a{std::move(ac)};
        Polynomial b{std::move(bc)};
        if (b.is_zero()) continue;
        Polynomial q, r;
        Polynomial::divide(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd is monic and divides both arguments") {
    Polynomial a = Polynomial::from_ints({-1, 0, 1});  // (z-1)(z+1)
    Polynomial b = Polynomial::from_ints({-1, 1});     // z - 1
    CHECK(gcd(a, b) == b);

    // common factor with non-unit leading coefficients
    Polynomial c = Polynomial::from_ints({2, 2});  // 2(z+1)
    Polynomial d = Polynomial::from_ints({4, 4});  // 4(z+1)
    CHECK(gcd(c, d) == Polynomial::from_ints({1, 1}));

    CHECK(gcd(a, Polynomial::zero()) == a.monic());
    CHECK(gcd(Polynomial::zero(), Polynomial::zero()) == Polynomial::zero());

    Polynomial coprime_a = Polynomial::from_ints({1, 0, 1});
    Polynomial coprime_b = Polynomial::from_ints({-1, 1});
    CHECK(gcd(coprime_a, coprime_b) == Polynomial::from_ints({1}));
}

TEST_CASE("squarefree part strips repeated factors") {
    Polynomial root1 = Polynomial::from_ints({-1, 1});
    Polynomial root2 = Polynomial::from_ints({2, 1});
    Polynomial p = root1 * root1 * root2;
    CHECK(squarefree_part(p) == (root1 * root2).monic());
    CHECK_FALSE(is_squarefree(p));
    CHECK(is_squarefree(root1 * root2));
    CHECK(is_squarefree(Polynomial::from_ints({7})));
    CHECK_THROWS_AS(squarefree_part(Polynomial::zero()), InvalidInput);
}

TEST_CASE("derivative and monic") {
    Polynomial p = Polynomial::from_ints({5, 3, 0, 2});  // 2z^3 + 3z + 5
    CHECK(p.derivative() == Polynomial::from_ints({3, 0, 6}));
    CHECK(Polynomial::constant(Rational(4)).derivative() == Polynomial::zero());
    CHECK(p.monic().leading_coefficient() == Rational(1));
    CHECK(Rational(2) * p.monic() == p);
}

TEST_CASE("printing") {
    CHECK(to_string(Polynomial::from_ints({-2, 0, 1})) == "z^2 - 2");
    CHECK(to_string(Polynomial::zero()) == "0");
}
