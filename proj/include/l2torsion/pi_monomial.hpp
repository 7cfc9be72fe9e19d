#pragma once

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "interval.hpp"
#include "rational.hpp"

namespace l2torsion {

// A single term q * pi^(h/2) with exact rational q and integer h (half-powers
// admit the Gamma(k+1/2) factors of heat-trace coefficients). Every exact
// value in this library is such a monomial; sums only combine like powers,
// and mixing powers is a hard error rather than a silent approximation.
class PiMonomial {
public:
    PiMonomial() = default; // zero
    PiMonomial(Rational coeff, int half_power)
        : c_(std::move(coeff)), h_(c_.is_zero() ? 0 : half_power) {}

    static PiMonomial zero() { return {}; }
    static PiMonomial from_rational(Rational q) { return PiMonomial(std::move(q), 0); }
    // q * pi^p for an integer power p.
    static PiMonomial pi_power(Rational q, int p) { return PiMonomial(std::move(q), 2 * p); }

    const Rational& coeff() const { return c_; }
    int half_power() const { return h_; }

    bool is_zero() const { return c_.is_zero(); }
    int sign() const { return c_.sign(); }
    PiMonomial abs() const { return PiMonomial(c_.abs(), h_); }
    PiMonomial operator-() const { return PiMonomial(-c_, h_); }

    friend PiMonomial operator+(const PiMonomial& a, const PiMonomial& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.h_ != b.h_)
            throw Error("PiMonomial: addition requires equal pi powers (" +
                        std::to_string(a.h_) + "/2 vs " + std::to_string(b.h_) + "/2)");
        return PiMonomial(a.c_ + b.c_, a.h_);
    }
    friend PiMonomial operator-(const PiMonomial& a, const PiMonomial& b) { return a + (-b); }
    PiMonomial& operator+=(const PiMonomial& o) { return *this = *this + o; }

    friend PiMonomial operator*(const PiMonomial& a, const PiMonomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return PiMonomial(a.c_ * b.c_, a.h_ + b.h_);
    }
    friend PiMonomial operator*(const Rational& s, const PiMonomial& m) {
        return PiMonomial(s * m.c_, m.h_);
    }
    friend PiMonomial operator*(const PiMonomial& m, const Rational& s) { return s * m; }

    friend bool operator==(const PiMonomial& a, const PiMonomial& b) {
        return a.h_ == b.h_ && a.c_ == b.c_;
    }
    friend bool operator!=(const PiMonomial& a, const PiMonomial& b) { return !(a == b); }

    long double to_long_double() const {
        if (is_zero()) return 0.0L;
        constexpr long double kPi = 3.14159265358979323846264338327950288L;
        return c_.to_long_double() *
               std::pow(kPi, static_cast<long double>(h_) / 2.0L);
    }

    // Rational enclosure of the value; requires an integer pi power.
    RatInterval value_interval(unsigned long pi_bits) const {
        if (h_ % 2 != 0)
            throw std::logic_error("PiMonomial::value_interval: half-integer pi power");
        if (is_zero()) return RatInterval(Rational(0), Rational(0));
        const int p = h_ / 2;
        if (p == 0) return RatInterval(c_, c_);
        const RatInterval pi = pi_enclosure(pi_bits);
        const RatInterval base = p > 0
            ? pi.pow_positive(static_cast<unsigned long>(p))
            : pi.pow_positive(static_cast<unsigned long>(-p)).reciprocal();
        return base.scaled(c_);
    }

    // Canonical exact rendering: "0", "q", "-q/den * pi^-n". Only zero and
    // non-positive integer pi powers occur in printable exact values.
    std::string exact_str() const {
        if (is_zero()) return "0";
        if (h_ % 2 != 0 || h_ > 0)
            throw std::logic_error("PiMonomial::exact_str: value outside the exact grammar");
        if (h_ == 0) return c_.str();
        return c_.str() + " * pi^-" + std::to_string(-h_ / 2);
    }

    // Inverse of exact_str; also accepts "0" and bare rationals.
    static PiMonomial parse_exact(std::string_view s);

    // Debug rendering, any power: "17/45 * pi^-2", "1/8 * pi^-3/2".
    std::string str() const {
        if (is_zero()) return "0";
        if (h_ == 0) return c_.str();
        std::string out = c_.str() + " * pi^";
        if (h_ % 2 == 0) return out + std::to_string(h_ / 2);
        return out + std::to_string(h_) + "/2";
    }

private:
    Rational c_;
    int h_ = 0;
};

inline PiMonomial PiMonomial::parse_exact(std::string_view s) {
    const auto fail = [&] {
        throw std::invalid_argument("PiMonomial::parse_exact: bad value '" + std::string(s) + "'");
    };
    const auto is_digits = [](std::string_view v) {
        if (v.empty()) return false;
        for (char ch : v)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };

    std::string_view rat = s;
    int power = 0;
    if (const auto pos = s.find(" * pi^-"); pos != std::string_view::npos) {
        rat = s.substr(0, pos);
        const std::string_view exp = s.substr(pos + 7);
        if (!is_digits(exp) || exp.size() > 9) fail();
        power = std::stoi(std::string(exp));
    }

    std::string_view mag = rat;
    bool neg = false;
    if (!mag.empty() && mag.front() == '-') {
        neg = true;
        mag.remove_prefix(1);
    }
    std::string_view num = mag, den = "1";
    if (const auto slash = mag.find('/'); slash != std::string_view::npos) {
        num = mag.substr(0, slash);
        den = mag.substr(slash + 1);
    }
    if (!is_digits(num) || !is_digits(den)) fail();
    Rational q(Int(std::string(num), 10), Int(std::string(den), 10));
    if (neg) q = -q;
    if (q.is_zero() && power != 0) fail();
    return PiMonomial(q, -2 * power);
}

} // namespace l2torsion
