#pragma once

#include <stdexcept>
#include <utility>

#include "rational.hpp"

namespace l2torsion {

// Closed interval [lo, hi] with rational endpoints. Used to decide
// inequalities against pi without trusting floating point: a comparison
// answered by the interval is a proof, a straddled endpoint is "indeterminate".
struct RatInterval {
    Rational lo;
    Rational hi;

    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
    }

    Rational width() const { return hi - lo; }

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const RatInterval& other) const { return lo <= other.lo && other.hi <= hi; }

    // -1: x < lo (entire interval lies above x),
    // +1: x > hi (entire interval lies below x),
    //  0: x inside, comparison undecided at this width.
    int side_of(const Rational& x) const {
        if (x < lo) return -1;
        if (x > hi) return +1;
        return 0;
    }

    // [lo, hi]^e for lo > 0; monotone, so endpoints power through.
    RatInterval pow_positive(unsigned long e) const {
        if (lo.sign() <= 0)
            throw std::invalid_argument("RatInterval::pow_positive: requires lo > 0");
        return RatInterval(lo.pow(static_cast<long>(e)), hi.pow(static_cast<long>(e)));
    }

    // 1/[lo, hi]; requires the interval to exclude zero.
    RatInterval reciprocal() const {
        if (lo.sign() <= 0 && hi.sign() >= 0)
            throw std::invalid_argument("RatInterval::reciprocal: interval contains zero");
        return RatInterval(hi.reciprocal(), lo.reciprocal());
    }

    // c * [lo, hi]; endpoints swap for c < 0.
    RatInterval scaled(const Rational& c) const {
        if (c.sign() >= 0) return RatInterval(c * lo, c * hi);
        return RatInterval(c * hi, c * lo);
    }
};

namespace detail {

// Directed-rounding fixed-point arctan(1/u) at 2^-prec resolution:
// returns integer [A, B] with A/2^prec <= arctan(1/u) <= B/2^prec.
// Alternating Leibniz series; each term floored/ceiled, truncation tail
// bounded by one extra unit in each direction.
inline std::pair<Int, Int> atan_inv_fixed(unsigned long u, unsigned long prec) {
    Int scale = Int(1) << prec;
    const Int u2 = Int(u) * Int(u);
    Int upow(u); // u^(2k+1)
    Int a(0), b(0);
    for (unsigned long k = 0;; ++k) {
        const Int denom = Int(2 * k + 1) * upow;
        const Int term = scale / denom; // floor; series term is positive
        if (term == 0) {
            // Remaining tail < 2^-prec in magnitude, either sign.
            a -= 1;
            b += 1;
            break;
        }
        if (k % 2 == 0) {
            a += term;
            b += term + 1;
        } else {
            a -= term + 1;
            b -= term;
        }
        upow *= u2;
    }
    return {a, b};
}

} // namespace detail

// Certified enclosure of pi with width() <= 2^-bits, via Machin's formula
// pi = 16*arctan(1/5) - 4*arctan(1/239) evaluated in integer fixed point at
// bits+32 working precision (the 32 guard bits absorb the ~3.7*prec units of
// directed-rounding slack, so the raw width is < 2^-(bits+6)). The raw
// enclosure is then padded symmetrically by 2^-(bits+2) per side; the padding
// dominates the raw width, which makes refinement nest deterministically:
// pi_enclosure(b + 8) is always contained in pi_enclosure(b).
inline RatInterval pi_enclosure(unsigned long bits) {
    if (bits < 4 || bits > 4'000'000)
        throw std::invalid_argument("pi_enclosure: bits must be in [4, 4e6]");
    const unsigned long prec = bits + 32;
    const auto [a5, b5] = detail::atan_inv_fixed(5, prec);
    const auto [a239, b239] = detail::atan_inv_fixed(239, prec);
    const Int raw_lo = 16 * a5 - 4 * b239;
    const Int raw_hi = 16 * b5 - 4 * a239;
    const Int pad = Int(1) << (prec - bits - 2); // = 2^-(bits+2) in fixed point
    const Int denom = Int(1) << prec;
    return RatInterval(Rational(raw_lo - pad, denom), Rational(raw_hi + pad, denom));
}

} // namespace l2torsion
