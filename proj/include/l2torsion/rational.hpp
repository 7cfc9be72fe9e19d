#pragma once

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "errors.hpp"

namespace l2torsion {

// Arbitrary-precision integer. All combinatorial quantities (factorials,
// binomials, the K coefficients) live here; nothing in the library ever
// rounds through floating point on the exact paths.
using Int = mpz_class;

inline Int factorial_int(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial_int(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// Exact rational number, always canonical: den > 0, gcd(num, den) = 1,
// zero is 0/1. Thin wrapper over mpq_class so every call site deals in
// one vocabulary type with the invariants enforced at the boundary.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}            // NOLINT: implicit by design
    Rational(const Int& n) : v_(n) {}      // NOLINT
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    // Exact value of an IEEE double (every finite double is rational).
    static Rational from_double(double x) {
        Rational r;
        r.v_ = mpq_class(x);
        return r;
    }

    // Parses "[-]ddd[.ddd][e[+-]ddd]" exactly; "0.1" becomes 1/10, not the
    // nearest double. Throws std::invalid_argument on malformed input.
    static Rational from_decimal(std::string_view s);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    int sign() const { return mpq_sgn(v_.get_mpq_t()); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const {
        Rational r;
        mpq_abs(r.v_.get_mpq_t(), v_.get_mpq_t());
        return r;
    }

    Rational reciprocal() const {
        if (is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
        Rational r;
        mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
        return r;
    }

    // Integer power; exp < 0 requires a nonzero base.
    Rational pow(long exp) const {
        if (exp == 0) return Rational(1);
        const Rational base = exp < 0 ? reciprocal() : *this;
        const auto e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
        // num and den stay coprime under powering, so no re-canonicalization.
        Rational r;
        r.v_ = mpq_class(pow_int(base.num(), e), pow_int(base.den(), e));
        return r;
    }

    double to_double() const { return v_.get_d(); }

    long double to_long_double() const {
        // mpq_class::get_d() truncates to 53 bits; recover the full 64-bit
        // significand by reading a >=80-bit integer quotient prefix.
        if (is_zero()) return 0.0L;
        mpz_class n = v_.get_num();
        const bool neg = n < 0;
        if (neg) n = -n;
        const mpz_class& d = v_.get_den();
        const long nb = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
        const long db = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
        const long shift = (db + 80 > nb) ? (db + 80 - nb) : 0;
        mpz_class scaled;
        mpz_mul_2exp(scaled.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
        const mpz_class q = scaled / d; // >= 79 bits by construction
        const long qbits = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2));
        const long drop = qbits > 64 ? qbits - 64 : 0;
        mpz_class top;
        mpz_fdiv_q_2exp(top.get_mpz_t(), q.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
        const long double m = static_cast<long double>(mpz_get_ui(top.get_mpz_t()));
        const long double val = std::ldexp(m, static_cast<int>(drop - shift));
        return neg ? -val : val;
    }

    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
        return Rational(a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational Rational::from_decimal(std::string_view s) {
    const auto fail = [&] {
        throw std::invalid_argument("Rational::from_decimal: bad literal '" + std::string(s) + "'");
    };
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');

    std::string digits;
    long frac_len = 0;
    bool saw_digit = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        digits += s[i++];
        saw_digit = true;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i++];
            ++frac_len;
            saw_digit = true;
        }
    }
    if (!saw_digit) fail();

    long exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail();
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            exp10 = exp10 * 10 + (s[i++] - '0');
            if (exp10 > 1000000) fail();
        }
        if (eneg) exp10 = -exp10;
    }
    if (i != s.size()) fail();

    Int mantissa(digits, 10);
    if (neg) mantissa = -mantissa;
    const long net = exp10 - frac_len;
    if (net >= 0)
        return Rational(mantissa * pow_int(Int(10), static_cast<unsigned long>(net)), Int(1));
    return Rational(mantissa, pow_int(Int(10), static_cast<unsigned long>(-net)));
}

} // namespace l2torsion
