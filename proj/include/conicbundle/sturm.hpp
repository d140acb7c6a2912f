#pragma once

#include <vector>

#include "conicbundle/polynomial.hpp"
#include "conicbundle/rational.hpp"

namespace conicbundle {

// Endpoint of an interval on the real line, finite or infinite.
struct Endpoint {
    enum class Kind { neg_infinity, finite, pos_infinity };
    Kind kind = Kind::finite;
    Rational value;

    static Endpoint neg_infinity() { return {Kind::neg_infinity, Rational(0)}; }
    static Endpoint pos_infinity() { return {Kind::pos_infinity, Rational(0)}; }
    static Endpoint at(Rational v) { return {Kind::finite, std::move(v)}; }
};

// Open interval certified to contain exactly one real root of its associated
// square-free polynomial, or the distinguished point at infinity of the
// circle R u {inf}.
struct IsolatingInterval {
    Rational low;
    Rational high;
    bool at_infinity = false;

    static IsolatingInterval infinity_marker() { return {Rational(0), Rational(0), true}; }
    static IsolatingInterval around(Rational low, Rational high) {
        return {std::move(low), std::move(high), false};
    }
    Rational width() const { return high - low; }
    bool operator==(const IsolatingInterval&) const = default;
};

// Sturm chain of a square-free polynomial; remainders are scaled by positive
// constants only, which preserves all sign counts.
class SturmSequence {
public:
    explicit SturmSequence(const Polynomial& squarefree);

    const std::vector<Polynomial>& chain() const { return chain_; }
    int sign_changes_at(const Endpoint& x) const;
    // Number of roots in the half-open interval (lo, hi].
    int count_half_open(const Endpoint& lo, const Endpoint& hi) const;

private:
    std::vector<Polynomial> chain_;
};

// Exact number of real roots of square-free p in the open interval (lo, hi).
// Throws InvalidInput if p is zero or not square-free, or if lo >= hi.
int count_real_roots(const Polynomial& p, const Endpoint& lo, const Endpoint& hi);
int count_real_roots(const Polynomial& p);

// Strict bound B with every real root in (-B, B).
Rational root_bound(const Polynomial& p);

// One disjoint open interval per real root, sorted, each of width at most
// `max_width`, with a sign change of p across every interval.
std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p);
std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p, const Rational& max_width);

// Default refinement bound 2^-20.
Rational default_isolation_width();
Rational isolation_width_from_bits(int bits);

}  // namespace conicbundle
