#include "conicbundle/sturm.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "conicbundle/errors.hpp"

namespace conicbundle {

SturmSequence::SturmSequence(const Polynomial& squarefree) {
    if (squarefree.is_zero()) throw InvalidInput("Sturm sequence of the zero polynomial");
    chain_.push_back(squarefree);
    if (squarefree.degree() == 0) return;
    chain_.push_back(squarefree.derivative());
    while (chain_.back().degree() > 0) {
        Polynomial q, r;
        Polynomial::divide(chain_[chain_.size() - 2], chain_.back(), q, r);
        if (r.is_zero()) break;  // non-square-free input; caller validates
        // scale to leading coefficient +-1, a positive factor
        Rational lead = r.leading_coefficient();
        if (sign_of(lead) < 0) lead = -lead;
        chain_.push_back((Rational(1) / lead) * (-r));
    }
}

namespace {

int endpoint_sign(const Polynomial& p, const Endpoint& x) {
    switch (x.kind) {
        case Endpoint::Kind::neg_infinity:
            return p.sign_at_neg_infinity();
        case Endpoint::Kind::pos_infinity:
            return p.sign_at_pos_infinity();
        case Endpoint::Kind::finite:
        default:
            return p.sign_at(x.value);
    }
}

bool endpoint_less(const Endpoint& a, const Endpoint& b) {
    if (a.kind == Endpoint::Kind::neg_infinity) return b.kind != Endpoint::Kind::neg_infinity;
    if (a.kind == Endpoint::Kind::pos_infinity) return false;
    if (b.kind == Endpoint::Kind::pos_infinity) return true;
    if (b.kind == Endpoint::Kind::neg_infinity) return false;
    return a.value < b.value;
}

}  // namespace

int SturmSequence::sign_changes_at(const Endpoint& x) const {
    int changes = 0;
    int previous = 0;
    for (const Polynomial& p : chain_) {
        int s = endpoint_sign(p, x);
        if (s == 0) continue;
        if (previous != 0 && s != previous) ++changes;
        previous = s;
    }
    return changes;
}

int SturmSequence::count_half_open(const Endpoint& lo, const Endpoint& hi) const {
    return sign_changes_at(lo) - sign_changes_at(hi);
}

int count_real_roots(const Polynomial& p, const Endpoint& lo, const Endpoint& hi) {
    if (p.is_zero()) throw InvalidInput("count_real_roots of the zero polynomial");
    if (!is_squarefree(p)) {
        throw InvalidInput("count_real_roots requires a square-free polynomial; apply squarefree_part first");
    }
    if (!endpoint_less(lo, hi)) throw InvalidInput("count_real_roots: empty interval");
    SturmSequence seq(p);
    int count = seq.count_half_open(lo, hi);
    // (lo, hi] -> (lo, hi): drop hi if it is a root
    if (hi.kind == Endpoint::Kind::finite && p.sign_at(hi.value) == 0) --count;
    return count;
}

int count_real_roots(const Polynomial& p) {
    return count_real_roots(p, Endpoint::neg_infinity(), Endpoint::pos_infinity());
}

Rational root_bound(const Polynomial& p) {
    if (p.is_zero() || p.degree() == 0) return Rational(1);
    Rational bound(0);
    const Rational& lead = p.leading_coefficient();
    for (int k = 0; k < p.degree(); ++k) {
        Rational ratio = p.coefficient(k) / lead;
        if (sign_of(ratio) < 0) ratio = -ratio;
        bound = std::max(bound, ratio);
    }
    return bound + 1;
}

Rational default_isolation_width() { return isolation_width_from_bits(20); }

Rational isolation_width_from_bits(int bits) {
    if (bits < 1 || bits > 256) throw InvalidInput("refinement bits out of range [1, 256]");
    Integer den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    Rational w(Integer(1), den);
    w.canonicalize();
    return w;
}

namespace {

// Interior point of (lo, hi) that is not a root of p. At most deg(p) interior
// candidates can be roots, so one of deg(p)+1 equally spaced points is free.
// Candidates closest to the midpoint are tried first to keep shrinkage near
// bisection.
Rational non_root_split(const Polynomial& p, const Rational& lo, const Rational& hi) {
    long parts = p.degree() + 1;
    std::vector<long> order(static_cast<std::size_t>(parts));
    std::iota(order.begin(), order.end(), 1L);
    std::stable_sort(order.begin(), order.end(), [parts](long a, long b) {
        return std::abs(2 * a - (parts + 1)) < std::abs(2 * b - (parts + 1));
    });
    Rational step = (hi - lo) / Rational(parts + 1);
    for (long j : order) {
        Rational candidate = lo + Rational(j) * step;
        if (p.sign_at(candidate) != 0) return candidate;
    }
    throw InvalidInput("no non-root split point found (unreachable for nonzero p)");
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p) {
    return isolate_real_roots(p, default_isolation_width());
}

std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p, const Rational& max_width) {
    if (p.is_zero()) throw InvalidInput("isolate_real_roots of the zero polynomial");
    if (!is_squarefree(p)) {
        throw InvalidInput("isolate_real_roots requires a square-free polynomial");
    }
    if (sign_of(max_width) <= 0) throw InvalidInput("isolation width must be positive");

    std::vector<IsolatingInterval> result;
    if (p.degree() == 0) return result;

    SturmSequence seq(p);
    auto count_open = [&](const Rational& lo, const Rational& hi) {
        // endpoints are never roots by construction
        return seq.count_half_open(Endpoint::at(lo), Endpoint::at(hi));
    };

    Rational bound = root_bound(p);
    struct Segment {
        Rational lo, hi;
        int roots;
    };
    std::vector<Segment> stack;
    int total = seq.count_half_open(Endpoint::at(-bound), Endpoint::at(bound));
    if (total > 0) stack.push_back({-bound, bound, total});

    while (!stack.empty()) {
        Segment seg = std::move(stack.back());
        stack.pop_back();
        if (seg.roots == 1) {
            // refine by repeated splitting; the single simple root keeps a
            // sign change across the interval
            Rational lo = seg.lo;
            Rational hi = seg.hi;
            int lo_sign = p.sign_at(lo);
            while (hi - lo > max_width) {
                Rational mid = non_root_split(p, lo, hi);
                if (p.sign_at(mid) == lo_sign) {
                    lo = std::move(mid);
                } else {
                    hi = std::move(mid);
                }
            }
            result.push_back(IsolatingInterval::around(std::move(lo), std::move(hi)));
            continue;
        }
        Rational mid = non_root_split(p, seg.lo, seg.hi);
        int left = count_open(seg.lo, mid);
        int right = seg.roots - left;
        if (left > 0) stack.push_back({seg.lo, mid, left});
        if (right > 0) stack.push_back({std::move(mid), seg.hi, right});
    }

    std::sort(result.begin(), result.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.low < b.low; });
    return result;
}

}  // namespace conicbundle
