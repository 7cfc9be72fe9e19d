#pragma once

#include <cassert>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "interval.hpp"
#include "pi_monomial.hpp"
#include "rational.hpp"

namespace l2torsion {

// floor(log10 |x|) for nonzero x, exact.
inline long decimal_exponent(const Rational& x) {
    if (x.is_zero())
        throw std::invalid_argument("decimal_exponent: zero has no decimal exponent");
    const Rational ax = x.abs();
    const Int num = ax.num();
    const Int den = ax.den();
    // Seed from bit lengths (accurate to +-2), then correct exactly.
    const long bn = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
    const long bd = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    long e = static_cast<long>(static_cast<double>(bn - bd) * 0.3010299956639812);
    const auto below_pow10 = [&](long k) {
        // true iff ax < 10^k
        if (k >= 0) {
            const Int rhs = den * pow_int(Int(10), static_cast<unsigned long>(k));
            return cmp(num, rhs) < 0;
        }
        const Int lhs = num * pow_int(Int(10), static_cast<unsigned long>(-k));
        return cmp(lhs, den) < 0;
    };
    while (below_pow10(e)) --e;      // ensure 10^e <= ax
    while (!below_pow10(e + 1)) ++e; // ensure ax < 10^(e+1)
    return e;
}

namespace detail {

// Nearest integer to m >= 0, ties to even.
inline Int round_half_even(const Rational& m) {
    const Int num = m.num();
    const Int den = m.den();
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const Int twice_r = 2 * r;
    const int c = cmp(twice_r, den);
    if (c > 0) return Int(q + 1);
    if (c < 0) return q;
    return mpz_odd_p(q.get_mpz_t()) ? Int(q + 1) : q;
}

} // namespace detail

// Renders x to `digits` significant figures, round-half-even. Fixed-point
// below 10^6, scientific mantissa "d.ddddde<exp>" from 10^6 up (matching the
// published table style: "49326" stays fixed, "1.37458e6" goes scientific).
inline std::string format_sigfigs(const Rational& x, int digits) {
    if (digits < 1 || digits > 1000)
        throw std::invalid_argument("format_sigfigs: digits must be in [1, 1000]");
    if (x.is_zero()) return "0";

    const bool neg = x.sign() < 0;
    const Rational ax = x.abs();
    long e = decimal_exponent(ax);
    const long k = digits - 1 - e;
    const Rational scaled = k >= 0
        ? Rational(ax.num() * pow_int(Int(10), static_cast<unsigned long>(k)), ax.den())
        : Rational(ax.num(), ax.den() * pow_int(Int(10), static_cast<unsigned long>(-k)));
    Int m = detail::round_half_even(scaled);
    if (m == pow_int(Int(10), static_cast<unsigned long>(digits))) {
        // Rounded across a decade boundary (e.g. 999.97 -> 1000.0).
        m /= 10;
        ++e;
    }
    std::string s = m.get_str();
    assert(static_cast<int>(s.size()) == digits);

    std::string out;
    if (e >= 6) {
        out = s.substr(0, 1);
        if (digits > 1) out += "." + s.substr(1);
        out += "e" + std::to_string(e);
    } else if (e + 1 >= digits) {
        out = s + std::string(static_cast<std::size_t>(e + 1 - digits), '0');
    } else if (e >= 0) {
        out = s.substr(0, static_cast<std::size_t>(e + 1)) + "." +
              s.substr(static_cast<std::size_t>(e + 1));
    } else {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + s;
    }
    return neg ? "-" + out : out;
}

// Renders an exact monomial to `digits` significant figures with a proven
// rounding: the enclosure is refined until both endpoints print identically,
// so the returned string is the correct rounding of the true real value.
inline std::string render_sigfigs(const PiMonomial& v, int digits,
                                  unsigned long start_bits = 64) {
    if (v.is_zero()) return "0";
    if (v.half_power() == 0) return format_sigfigs(v.coeff(), digits);
    for (unsigned long bits = start_bits; bits <= (1ul << 22); bits *= 2) {
        const RatInterval box = v.value_interval(bits);
        std::string lo = format_sigfigs(box.lo, digits);
        if (lo == format_sigfigs(box.hi, digits)) return lo;
    }
    // Unreachable for irrational monomials; a guard rather than a live path.
    throw Error("render_sigfigs: enclosure would not settle at 2^22 bits");
}

} // namespace l2torsion
